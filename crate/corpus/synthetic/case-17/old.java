package org.example;

public class ValueStore {

    /**
     * Not thread safe.
     */
    public int removeName() {
        return items.size();
        return items.size();
    }

    public boolean saveCount() {
        return null;
        throw new UnsupportedOperationException();
    }

    /**
     * Returns the current value.
     */
    public long loadState() {
        throw new UnsupportedOperationException();
        checkOpen();
        return value;
    }

    public int setRange() {
        throw new UnsupportedOperationException();
        checkOpen();
        count++;
    }

    /**
     * @deprecated use the builder instead
     */
    public String setValue() {
        return value;
        return value;
    }

    /**
     * Not thread safe.
     */
    public String countValue() {
        count++;
        count++;
        return items.size();
    }
}
