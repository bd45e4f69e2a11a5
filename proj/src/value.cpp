#include "relift/value.hpp"

#include <algorithm>

#include "relift/errors.hpp"

namespace relift {

Value::Value() : node_(empty_set().node_) {}

Value Value::atom(std::uint64_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::atom;
  node->index = index;
  return Value(std::move(node));
}

Value Value::pair(Value first, Value second) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::pair;
  node->children.reserve(2);
  node->children.push_back(std::move(first));
  node->children.push_back(std::move(second));
  return Value(std::move(node));
}

Value Value::set(std::vector<Value> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) return empty_set();
  auto node = std::make_shared<Node>();
  node->kind = Kind::set;
  node->children = std::move(elements);
  return Value(std::move(node));
}

const Value& Value::empty_set() {
  static const Value v{std::make_shared<const Node>()};
  return v;
}

std::uint64_t Value::atom_index() const {
  if (!is_atom()) throw contract_error("atom_index on a non-atom value " + text());
  return node_->index;
}

const Value& Value::first() const {
  if (!is_pair()) throw contract_error("first on a non-pair value " + text());
  return node_->children[0];
}

const Value& Value::second() const {
  if (!is_pair()) throw contract_error("second on a non-pair value " + text());
  return node_->children[1];
}

std::span<const Value> Value::elements() const {
  if (!is_set()) throw contract_error("elements on a non-set value " + text());
  return {node_->children.data(), node_->children.size()};
}

std::size_t Value::set_size() const { return elements().size(); }

bool Value::set_contains(const Value& v) const {
  auto elems = elements();
  return std::binary_search(elems.begin(), elems.end(), v);
}

std::string Value::text() const {
  switch (kind()) {
    case Kind::atom:
      return "a" + std::to_string(node_->index);
    case Kind::pair:
      return "(" + first().text() + "," + second().text() + ")";
    case Kind::set: {
      std::string out = "{";
      bool sep = false;
      for (const Value& v : node_->children) {
        if (sep) out += ",";
        out += v.text();
        sep = true;
      }
      out += "}";
      return out;
    }
  }
  return {};
}

int Value::compare(const Value& other) const {
  if (node_ == other.node_) return 0;
  const int ka = static_cast<int>(kind());
  const int kb = static_cast<int>(other.kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (kind()) {
    case Kind::atom: {
      if (node_->index != other.node_->index) return node_->index < other.node_->index ? -1 : 1;
      return 0;
    }
    case Kind::pair: {
      int c = node_->children[0].compare(other.node_->children[0]);
      if (c != 0) return c;
      return node_->children[1].compare(other.node_->children[1]);
    }
    case Kind::set: {
      const auto& a = node_->children;
      const auto& b = other.node_->children;
      const std::size_t n = std::min(a.size(), b.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = a[i].compare(b[i]);
        if (c != 0) return c;
      }
      if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

}  // namespace relift
