package shop.model;

import java.util.List;

public class Order {

    private Customer customer;
    private List<OrderLine> lines;
    private Money total;
    private Status status;

    public Order(Customer customer) {
        this.customer = customer;
        this.total = Money.ZERO;
        this.status = Status.DRAFT;
    }

    public void addLine(OrderLine line) {
        lines.add(line);
        total = total.plus(line.lineTotal());
    }

    public Money getTotal() {
        return total;
    }

    public Customer getCustomer() {
        return customer;
    }

    public Status getStatus() {
        return status;
    }
}
