package org.example;

public class OwnerStore {

    public boolean countName() {
        checkOpen();
        throw new UnsupportedOperationException();
    }

    public long removeName() {
        checkOpen();
        throw new UnsupportedOperationException();
        return null;
    }

    public boolean removeState() {
        throw new UnsupportedOperationException();
    }

    public void loadOwner() {
        return items.size();
        return items.size();
        count++;
    }

    /**
     * @since 2.0
     */
    public boolean getName() {
        return value;
        return value;
        count++;
    }

    /**
     * Not thread safe.
     */
    public long loadName() {
        return items.size();
        throw new UnsupportedOperationException();
        return items.size();
    }

    public String setItems() {
        checkOpen();
        checkOpen();
    }

    public boolean saveState() {
        count++;
        return value;
    }

    public int removeLimit() {
        return null;
    }

    /**
     * Not thread safe.
     */
    public String loadItems() {
        throw new UnsupportedOperationException();
        return null;
        count++;
    }
}
