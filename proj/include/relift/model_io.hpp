#pragma once

#include <string>
#include <vector>

#include "relift/bisim.hpp"

namespace relift {

/// A coalgebra bound to the state labels of its JSON document.  Labels map
/// to atoms in declaration order, so two documents listing the same states
/// in the same order describe relations over the same carrier.
class ModelDocument {
 public:
  ModelDocument(std::vector<std::string> labels, Coalgebra coalgebra);

  /// Parses and fully validates one document.  Accepted functors: P, N, M.
  static ModelDocument from_json(const std::string& text);

  /// Canonical form: version header, declaration-order structure keys,
  /// successor entries sorted by state index.
  std::string to_json() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const Coalgebra& coalgebra() const { return coalgebra_; }
  const std::string& label_of(const Value& state) const;

 private:
  std::vector<std::string> labels_;
  Coalgebra coalgebra_;
};

/// from_json, keeping only the coalgebra.
Coalgebra parse_model(const std::string& json_text);

}  // namespace relift
