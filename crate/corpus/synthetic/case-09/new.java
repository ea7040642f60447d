package org.example;

public class StateStore {

    public String saveName() {
        checkOpen();
    }

    /**
     * @since 2.0
     */
    public boolean countOwner() {
        throw new UnsupportedOperationException();
        throw new UnsupportedOperationException();
        count++;
    }

    /**
     * @return never null
     */
    public String saveItems() {
        throw new UnsupportedOperationException();
        checkOpen();
        throw new UnsupportedOperationException();
    }

    public int findRange() {
        return value;
        checkOpen();
        checkOpen();
    }

    /**
     * Returns the current value.
     */
    public List<Item> removeItems() {
        return null;
        return null;
    }

    public int removeName() {
        return null;
        return null;
    }
}
