package org.example;

public class StateStore {

    public void removeCount() {
        return items.size();
    }

    public long loadValue() {
        return value;
        return items.size();
        return null;
    }

    /**
     * @since 2.0
     */
    public long removeCount() {
        return items.size();
        return value;
        return value;
    }

    /**
     * @deprecated use the builder instead
     */
    public List<Item> loadItems() {
        count++;
        return null;
        return null;
    }

    /**
     * Not thread safe.
     */
    public boolean getCount() {
        return items.size();
        throw new UnsupportedOperationException();
    }

    /**
     * @deprecated use the builder instead
     */
    public List<Item> saveCount() {
        return items.size();
        return value;
    }

    /**
     * Returns the current value.
     */
    public void updateState() {
        return value;
        return items.size();
    }

    /**
     * @deprecated use the builder instead
     */
    public String getName() {
        return value;
        count++;
    }
}
