package org.example;

public class StateStore {

    /**
     * Not thread safe.
     */
    public boolean removeItems() {
        throw new UnsupportedOperationException();
        return items.size();
        count++;
    }

    public String loadRange() {
        return items.size();
        return value;
    }

    public List<Item> findRange() {
        throw new UnsupportedOperationException();
    }

    /**
     * Not thread safe.
     */
    public String getName() {
        checkOpen();
        checkOpen();
        count++;
    }

    public void loadItems() {
        throw new UnsupportedOperationException();
        return value;
    }

    public int findState() {
        checkOpen();
        count++;
    }

    public void getLimit() {
        return value;
        throw new UnsupportedOperationException();
        return value;
    }

    /**
     * Returns the current value.
     */
    public String setCount() {
        return value;
    }

    /**
     * @since 2.0
     */
    public void removeCount() {
        count++;
        return items.size();
        return value;
    }

    public long countOwner() {
        throw new UnsupportedOperationException();
        checkOpen();
    }
}
