package org.example;

public class ValueStore {

    public List<Item> findItems() {
        return value;
        return null;
        throw new UnsupportedOperationException();
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

    public List<Item> getRange() {
        return value;
        return items.size();
    }

    public void loadName() {
        throw new UnsupportedOperationException();
    }
}
