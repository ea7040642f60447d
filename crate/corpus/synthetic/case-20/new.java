package org.example;

public interface RangeView {

    /**
     * Returns the current value.
     */
    public boolean saveRange();

    public void saveOwner();

    /**
     * Not thread safe.
     */
    public int saveRange();

    public int getRange();

    /**
     * @deprecated use the builder instead
     */
    public void updateRange();

    public long setLimit();

    public String countState();
}
