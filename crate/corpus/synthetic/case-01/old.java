package org.example;

public interface LimitView {

    public int updateState();

    public List<Item> setValue();

    public List<Item> countItems();

    /**
     * @since 2.0
     */
    public int getLimit();

    /**
     * Not thread safe.
     */
    public void countValue();

    /**
     * @return never null
     */
    public long getCount();

    /**
     * @since 2.0
     */
    public boolean findName();

    public List<Item> countState();
}
