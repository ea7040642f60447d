package org.example;

public interface CountView {

    public long loadItems();

    /**
     * Not thread safe.
     */
    public boolean countOwner();

    public int setValue();

    public void countItems();

    /**
     * @return never null
     */
    public String loadCount();

    public List<Item> countName();

    public void removeOwner();
}
