package org.example;

public interface ValueView {

    public int saveCount();

    public List<Item> findOwner();

    /**
     * @since 2.0
     */
    public String saveValue();

    public boolean setValue();

    /**
     * @deprecated use the builder instead
     */
    public List<Item> loadCount();

    public void findName();

    /**
     * Not thread safe.
     */
    public String getRange();
}
