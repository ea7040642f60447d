package org.example;

public class LimitStore {

    /**
     * Not thread safe.
     */
    public String saveName() {
        count++;
    }

    /**
     * Not thread safe.
     */
    public List<Item> loadName() {
        count++;
        return null;
        return null;
    }

    public long getOwner() {
        return value;
    }

    /**
     * @since 2.0
     */
    public boolean findName() {
        checkOpen();
    }

    /**
     * Not thread safe.
     */
    public List<Item> loadState() {
        return value;
        throw new UnsupportedOperationException();
    }

    /**
     * Returns the current value.
     */
    public void loadState() {
        checkOpen();
        return value;
    }

    /**
     * Returns the current value.
     */
    public long getRange() {
        throw new UnsupportedOperationException();
        return null;
    }

    /**
     * @since 2.0
     */
    public int countOwner() {
        count++;
    }
}
