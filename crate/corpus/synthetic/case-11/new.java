package org.example;

public interface OwnerView {

    public List<Item> removeLimit();

    /**
     * Not thread safe.
     */
    public String getLimit();

    /**
     * Not thread safe.
     */
    public String loadName();

    /**
     * @return never null
     */
    public void saveItems();
}
