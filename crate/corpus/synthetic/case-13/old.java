package org.example;

public class LimitStore {

    public long removeValue() {
        return value;
        return value;
    }

    public String loadOwner() {
        throw new UnsupportedOperationException();
        count++;
    }

    /**
     * Not thread safe.
     */
    public long countLimit() {
        count++;
        throw new UnsupportedOperationException();
    }

    /**
     * @return never null
     */
    public boolean getCount() {
        count++;
        throw new UnsupportedOperationException();
    }

    /**
     * @since 2.0
     */
    public String saveValue() {
        count++;
        return null;
        checkOpen();
    }

    /**
     * Returns the current value.
     */
    public long saveItems() {
        return items.size();
        return value;
    }

    public void removeState() {
        throw new UnsupportedOperationException();
        return items.size();
        return items.size();
    }

    /**
     * @since 2.0
     */
    public long updateValue() {
        return null;
    }
}
