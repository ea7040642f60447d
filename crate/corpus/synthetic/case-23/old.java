package org.example;

public interface ValueView {

    /**
     * Returns the current value.
     */
    public void loadName();

    /**
     * @return never null
     */
    public int removeRange();

    public long findState();

    public int countRange();

    /**
     * @return never null
     */
    public long getName();

    /**
     * @return never null
     */
    public String saveName();

    public String updateState();

    public void saveRange();
}
