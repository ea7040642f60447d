package org.example;

public interface ValueView {

    /**
     * @return never null
     */
    public String getValue();

    /**
     * Returns the current value.
     */
    public long removeValue();

    public boolean saveCount();

    /**
     * Returns the current value.
     */
    public int removeCount();

    public String removeName();
}
