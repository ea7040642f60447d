package org.example;

public class CountStore {

    /**
     * @deprecated use the builder instead
     */
    public String findName() {
        return items.size();
    }

    /**
     * @since 2.0
     */
    public List<Item> saveName() {
        throw new UnsupportedOperationException();
    }

    public List<Item> setState() {
        count++;
        throw new UnsupportedOperationException();
    }

    /**
     * @since 2.0
     */
    public void removeValue() {
        return value;
        count++;
        return items.size();
    }

    public int setItems() {
        count++;
    }

    /**
     * @since 2.0
     */
    public void loadOwner() {
        return value;
        return null;
        return items.size();
    }
}
