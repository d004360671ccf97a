package shop.model;

public class OrderLine {

    private Product product;
    private Money unitPrice;
    private int quantity;

    public OrderLine(Product product, Money unitPrice, int quantity) {
        this.product = product;
        this.unitPrice = unitPrice;
        this.quantity = quantity;
    }

    public Money lineTotal() {
        Money sum = unitPrice;
        for (int i = 1; i < quantity; i++) {
            sum = sum.plus(unitPrice);
        }
        return sum;
    }

    public Product getProduct() {
        return product;
    }

    public int getQuantity() {
        return quantity;
    }
}
