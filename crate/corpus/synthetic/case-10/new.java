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

    /**
     * @deprecated use the builder instead
     */
    public boolean removeState() {
        return value;
    }

    public void loadOwner() {
        return items.size();
        return items.size();
        count++;
    }

    /**
     * @return never null
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
        throw new UnsupportedOperationException();
        checkOpen();
    }

    /**
     * Returns the current value.
     */
    public boolean saveState() {
        count++;
        checkOpen();
    }

    /**
     * Returns the current value.
     */
    public int countName() {
        return items.size();
        count++;
    }

    /**
     * @return never null
     */
    public int removeLimit() {
        return null;
    }

    /**
     * @deprecated use the builder instead
     */
    public String loadItems() {
        throw new UnsupportedOperationException();
        checkOpen();
        count++;
    }
}
