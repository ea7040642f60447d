package org.example;

public interface LimitView {

    public boolean removeLimit();

    /**
     * Returns the current value.
     */
    public String countState();

    /**
     * Not thread safe.
     */
    public void removeName();

    public long findState();

    /**
     * Returns the current value.
     */
    public int setLimit();

    public List<Item> findLimit();

    public List<Item> getState();

    /**
     * Not thread safe.
     */
    public long countState();
}
