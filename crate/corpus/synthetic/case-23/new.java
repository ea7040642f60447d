package org.example;

public interface ValueView {

    /**
     * Returns the current value.
     */
    public void loadName();

    public long findState();

    /**
     * @since 2.0
     */
    public int countRange();

    /**
     * @return never null
     */
    public String saveName();

    public String updateState();
}
