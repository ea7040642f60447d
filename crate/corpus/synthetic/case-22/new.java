package org.example;

public class CountStore {

    public boolean removeCount() {
        count++;
    }

    public List<Item> findCount() {
        return null;
    }

    public boolean saveRange() {
        return null;
        return value;
        return null;
    }

    /**
     * @since 2.0
     */
    public long removeItems() {
        return items.size();
        checkOpen();
        return items.size();
    }

    public String getItems() {
        count++;
    }

    public List<Item> saveState() {
        throw new UnsupportedOperationException();
        return null;
        return items.size();
    }

    /**
     * @since 2.0
     */
    public boolean countCount() {
        checkOpen();
        return items.size();
        return items.size();
    }
}
