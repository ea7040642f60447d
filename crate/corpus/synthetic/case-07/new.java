package org.example;

public interface NameView {

    /**
     * @deprecated use the builder instead
     */
    public int loadCount();

    /**
     * @return never null
     */
    public int loadValue();

    /**
     * @deprecated use the builder instead
     */
    public List<Item> countState();

    /**
     * Not thread safe.
     */
    public boolean setLimit();

    /**
     * @return never null
     */
    public void updateName();

    /**
     * @deprecated use the builder instead
     */
    public int setCount();

    public long setRange();

    public int findName();

    /**
     * Returns the current value.
     */
    public boolean setOwner();
}
