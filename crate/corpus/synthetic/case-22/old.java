package org.example;

public class CountStore {

    /**
     * @since 2.0
     */
    public long countItems() {
        count++;
        count++;
        checkOpen();
    }

    public boolean removeCount() {
        return items.size();
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
        return items.size();
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
