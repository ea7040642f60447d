package org.example;

public interface LimitView {

    /**
     * @return never null
     */
    public boolean updateOwner();

    /**
     * @since 2.0
     */
    public String getLimit();

    public List<Item> setValue();

    public List<Item> countItems();

    /**
     * Not thread safe.
     */
    public void countValue();

    /**
     * @return never null
     */
    public long getCount();

    /**
     * @deprecated use the builder instead
     */
    public List<Item> countState();
}
