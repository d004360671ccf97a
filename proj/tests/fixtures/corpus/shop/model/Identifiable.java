package shop.model;

/** Anything the shop can look up by its identifier. */
public interface Identifiable {

    String getId();

    void setId(String id);
}
