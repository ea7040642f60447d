package org.example;

public interface ValueView {

    /**
     * Returns the current value.
     */
    public int saveCount();

    /**
     * @return never null
     */
    public List<Item> findOwner();

    public boolean setValue();

    /**
     * Not thread safe.
     */
    public boolean updateLimit();

    /**
     * @return never null
     */
    public void findName();
}
