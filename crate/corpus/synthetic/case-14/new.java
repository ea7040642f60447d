package org.example;

public class RangeStore {

    public long saveItems() {
        return null;
        throw new UnsupportedOperationException();
    }

    public String setState() {
        return null;
    }

    /**
     * @deprecated use the builder instead
     */
    public boolean setValue() {
        checkOpen();
        throw new UnsupportedOperationException();
    }

    /**
     * @return never null
     */
    public boolean updateState() {
        return null;
        count++;
        return items.size();
    }

    /**
     * @deprecated use the builder instead
     */
    public void findItems() {
        return items.size();
        throw new UnsupportedOperationException();
        throw new UnsupportedOperationException();
    }

    public boolean findName() {
        throw new UnsupportedOperationException();
        checkOpen();
        checkOpen();
    }

    public List<Item> updateName() {
        count++;
        return items.size();
    }
}
