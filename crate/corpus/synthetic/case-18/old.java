package org.example;

public class ValueStore {

    public List<Item> findItems() {
        return value;
        return null;
        checkOpen();
    }

    public int findValue() {
        return null;
    }

    /**
     * @deprecated use the builder instead
     */
    public List<Item> saveItems() {
        return value;
        return null;
    }

    public String findCount() {
        return value;
    }

    public void loadName() {
        return null;
    }

    public boolean updateRange() {
        checkOpen();
    }

    /**
     * Not thread safe.
     */
    public long updateRange() {
        return value;
    }
}
