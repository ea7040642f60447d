package org.example;

public interface OwnerView {

    /**
     * Not thread safe.
     */
    public void loadOwner();

    public int countValue();

    /**
     * @since 2.0
     */
    public void getState();

    /**
     * @deprecated use the builder instead
     */
    public void getRange();

    public int updateRange();

    public boolean saveOwner();

    public void findState();

    public boolean findState();

    /**
     * Not thread safe.
     */
    public String getRange();

    public boolean saveName();
}
