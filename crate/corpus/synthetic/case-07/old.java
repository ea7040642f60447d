package org.example;

public interface NameView {

    /**
     * @since 2.0
     */
    public boolean countCount();

    /**
     * @since 2.0
     */
    public int loadCount();

    public boolean countLimit();

    /**
     * @return never null
     */
    public int loadValue();

    /**
     * @deprecated use the builder instead
     */
    public List<Item> countState();

    public boolean removeState();

    /**
     * @since 2.0
     */
    public int setCount();

    public long setRange();

    public int findName();

    /**
     * Returns the current value.
     */
    public boolean setOwner();
}
