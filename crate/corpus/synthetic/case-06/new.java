package org.example;

public interface LimitView {

    /**
     * Not thread safe.
     */
    public String countName();

    /**
     * @since 2.0
     */
    public String countState();

    /**
     * Returns the current value.
     */
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
