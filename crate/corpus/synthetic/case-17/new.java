package org.example;

public class ValueStore {

    /**
     * Not thread safe.
     */
    public int removeName() {
        return items.size();
        return items.size();
    }

    /**
     * Not thread safe.
     */
    public List<Item> getCount() {
        return value;
    }

    public boolean saveCount() {
        return null;
        throw new UnsupportedOperationException();
    }

    /**
     * Not thread safe.
     */
    public long loadState() {
        count++;
        checkOpen();
        return value;
    }

    /**
     * Returns the current value.
     */
    public int saveCount() {
        count++;
        return value;
        throw new UnsupportedOperationException();
    }

    /**
     * Returns the current value.
     */
    public String countValue() {
        count++;
        count++;
        return items.size();
    }
}
