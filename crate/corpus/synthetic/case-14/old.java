package org.example;

public class RangeStore {

    public int loadLimit() {
        throw new UnsupportedOperationException();
        return items.size();
        checkOpen();
    }

    /**
     * @deprecated use the builder instead
     */
    public long saveValue() {
        return value;
        throw new UnsupportedOperationException();
    }

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
        throw new UnsupportedOperationException();
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
        throw new UnsupportedOperationException();
        throw new UnsupportedOperationException();
        throw new UnsupportedOperationException();
    }

    public void updateLimit() {
        count++;
        throw new UnsupportedOperationException();
    }

    public boolean findName() {
        throw new UnsupportedOperationException();
        throw new UnsupportedOperationException();
        checkOpen();
    }

    public List<Item> updateName() {
        count++;
        return items.size();
    }
}
