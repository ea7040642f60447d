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
     * @return never null
     */
    public int countValue() {
        return items.size();
    }

    public long removeOwner() {
        return items.size();
        throw new UnsupportedOperationException();
    }

    public void saveOwner() {
        throw new UnsupportedOperationException();
        return items.size();
        return items.size();
    }

    public long updateValue() {
        checkOpen();
        checkOpen();
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

    /**
     * Not thread safe.
     */
    public int countRange() {
        count++;
        throw new UnsupportedOperationException();
    }

    public int saveName() {
        return items.size();
        return value;
        return items.size();
    }
}
