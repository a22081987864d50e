#include "nilclean/ring_spec.hpp"

namespace nilclean {

RingSpec RingSpec::zn(std::uint64_t n) {
    if (n == 0) throw InvalidSpec("Zn modulus must be positive");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Zn;
    node->n = n;
    return RingSpec(std::move(node));
}

RingSpec RingSpec::product(RingSpec left, RingSpec right) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Product;
    node->children.push_back(std::move(left));
    node->children.push_back(std::move(right));
    return RingSpec(std::move(node));
}

RingSpec RingSpec::matrix(std::uint32_t k, RingSpec base) {
    if (k == 0) throw InvalidSpec("matrix size must be positive");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Matrix;
    node->k = k;
    node->children.push_back(std::move(base));
    return RingSpec(std::move(node));
}

RingSpec RingSpec::nil_quotient(RingSpec base) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::NilQuotient;
    node->children.push_back(std::move(base));
    return RingSpec(std::move(node));
}

std::uint64_t RingSpec::modulus() const {
    if (kind() != Kind::Zn) throw RingError("modulus() called on a non-Zn spec");
    return node_->n;
}

std::uint32_t RingSpec::dim() const {
    if (kind() != Kind::Matrix) throw RingError("dim() called on a non-Matrix spec");
    return node_->k;
}

const RingSpec& RingSpec::left() const {
    if (kind() != Kind::Product) throw RingError("left() called on a non-Product spec");
    return node_->children[0];
}

const RingSpec& RingSpec::right() const {
    if (kind() != Kind::Product) throw RingError("right() called on a non-Product spec");
    return node_->children[1];
}

const RingSpec& RingSpec::base() const {
    if (kind() != Kind::Matrix && kind() != Kind::NilQuotient)
        throw RingError("base() called on a spec without a base");
    return node_->children[0];
}

bool operator==(const RingSpec& a, const RingSpec& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->kind != b.node_->kind) return false;
    switch (a.node_->kind) {
        case RingSpec::Kind::Zn:
            return a.node_->n == b.node_->n;
        case RingSpec::Kind::Product:
            return a.node_->children[0] == b.node_->children[0] &&
                   a.node_->children[1] == b.node_->children[1];
        case RingSpec::Kind::Matrix:
            return a.node_->k == b.node_->k &&
                   a.node_->children[0] == b.node_->children[0];
        case RingSpec::Kind::NilQuotient:
            return a.node_->children[0] == b.node_->children[0];
    }
    return false;
}

}  // namespace nilclean
