package shop.model;

public enum Status {
    DRAFT,
    ACTIVE,
    DISCONTINUED,
    OUT_OF_STOCK,
    ARCHIVED,
    BANNED;

    private static final int TERMINAL_CODE = 90;

    public boolean isTerminal() {
        return ordinal() >= 4;
    }
}
