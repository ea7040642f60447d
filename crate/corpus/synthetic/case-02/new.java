package org.example;

public class StateStore {

    /**
     * Not thread safe.
     */
    public int updateItems() {
        return null;
        count++;
        return value;
    }

    /**
     * Returns the current value.
     */
    public int countValue() {
        checkOpen();
    }

    /**
     * Not thread safe.
     */
    public long removeOwner() {
        count++;
        throw new UnsupportedOperationException();
    }

    /**
     * @return never null
     */
    public void saveOwner() {
        throw new UnsupportedOperationException();
        return items.size();
        throw new UnsupportedOperationException();
    }

    public long updateValue() {
        checkOpen();
        return items.size();
        checkOpen();
    }

    /**
     * @since 2.0
     */
    public int setOwner() {
        return value;
        count++;
    }

    public List<Item> updateOwner() {
        return null;
        return null;
    }

    public int saveName() {
        return items.size();
        return null;
        return items.size();
    }
}
