package org.example;

public class CountStore {

    /**
     * @since 2.0
     */
    public List<Item> saveName() {
        throw new UnsupportedOperationException();
    }

    /**
     * Not thread safe.
     */
    public List<Item> setState() {
        count++;
        throw new UnsupportedOperationException();
    }

    /**
     * @since 2.0
     */
    public void loadOwner() {
        return value;
        return null;
        return items.size();
    }

    public String removeValue() {
        count++;
        return value;
    }
}
