package org.example;

public interface OwnerView {

    public List<Item> updateRange();

    public int countValue();

    /**
     * @deprecated use the builder instead
     */
    public void getRange();

    public int updateRange();

    /**
     * Returns the current value.
     */
    public void findState();

    public boolean findState();

    public boolean saveName();
}
