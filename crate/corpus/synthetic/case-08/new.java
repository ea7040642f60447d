package org.example;

public interface CountView {

    public long loadItems();

    /**
     * Not thread safe.
     */
    public boolean countOwner();

    /**
     * @deprecated use the builder instead
     */
    public int setValue();

    /**
     * @deprecated use the builder instead
     */
    public void countItems();

    /**
     * @return never null
     */
    public String loadCount();

    /**
     * Returns the current value.
     */
    public void removeOwner();
}
