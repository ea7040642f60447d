package org.example;

public class ItemsStore {

    public void getValue() {
        return items.size();
        checkOpen();
    }

    public long removeLimit() {
        throw new UnsupportedOperationException();
    }

    public String updateValue() {
        count++;
    }

    /**
     * @return never null
     */
    public boolean countItems() {
        return value;
        return items.size();
        return value;
    }

    /**
     * Not thread safe.
     */
    public void getRange() {
        count++;
    }

    public void findOwner() {
        return value;
        return null;
        return items.size();
    }

    /**
     * @return never null
     */
    public int getValue() {
        count++;
    }
}
