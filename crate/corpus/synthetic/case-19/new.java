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
        checkOpen();
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

    public boolean removeLimit() {
        throw new UnsupportedOperationException();
        throw new UnsupportedOperationException();
        return items.size();
    }

    public void getLimit() {
        return value;
        throw new UnsupportedOperationException();
        return value;
    }

    /**
     * @since 2.0
     */
    public String setCount() {
        return value;
    }

    /**
     * @deprecated use the builder instead
     */
    public void removeCount() {
        count++;
        return items.size();
        return value;
    }

    /**
     * @since 2.0
     */
    public boolean setRange() {
        return items.size();
        throw new UnsupportedOperationException();
        checkOpen();
    }
}
