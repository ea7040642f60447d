package org.example;

public class LimitStore {

    /**
     * @since 2.0
     */
    public String saveName() {
        return items.size();
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
        checkOpen();
    }

    /**
     * Not thread safe.
     */
    public void loadState() {
        throw new UnsupportedOperationException();
        return value;
    }

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

    public int findName() {
        return null;
        count++;
        return null;
    }

    /**
     * Not thread safe.
     */
    public void loadItems() {
        return items.size();
        return items.size();
    }
}
