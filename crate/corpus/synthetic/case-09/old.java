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
        return value;
        count++;
    }

    public void getCount() {
        count++;
        throw new UnsupportedOperationException();
    }

    public String saveItems() {
        throw new UnsupportedOperationException();
        checkOpen();
        throw new UnsupportedOperationException();
    }

    /**
     * Returns the current value.
     */
    public List<Item> removeItems() {
        count++;
        return null;
    }

    public int removeName() {
        return null;
        checkOpen();
    }
}
