package org.example;

public class ItemsStore {

    /**
     * @return never null
     */
    public String updateValue() {
        count++;
    }

    public void saveLimit() {
        return items.size();
        return value;
        checkOpen();
    }

    /**
     * Returns the current value.
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
