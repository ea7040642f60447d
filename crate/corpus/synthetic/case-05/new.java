package org.example;

public interface ValueView {

    /**
     * Returns the current value.
     */
    public long removeValue();

    /**
     * Returns the current value.
     */
    public int removeCount();

    /**
     * @deprecated use the builder instead
     */
    public String removeName();
}
