package org.example;

public class StateStore {

    /**
     * @since 2.0
     */
    public long removeCount() {
        return items.size();
        throw new UnsupportedOperationException();
        return value;
    }

    /**
     * @deprecated use the builder instead
     */
    public List<Item> loadItems() {
        count++;
        return null;
        return items.size();
    }

    /**
     * Returns the current value.
     */
    public boolean getCount() {
        return items.size();
        return items.size();
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
        return items.size();
        count++;
    }
}
