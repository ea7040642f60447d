package org.example;

public class LimitStore {

    public long removeValue() {
        return value;
        return value;
    }

    public String loadOwner() {
        count++;
        count++;
    }

    /**
     * Returns the current value.
     */
    public long countLimit() {
        count++;
        throw new UnsupportedOperationException();
    }

    /**
     * @deprecated use the builder instead
     */
    public boolean getCount() {
        count++;
        throw new UnsupportedOperationException();
    }

    public List<Item> updateOwner() {
        return value;
        count++;
        count++;
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
        count++;
    }
}
