#include "relift/model_io.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include <json.hpp>

#include "relift/errors.hpp"

namespace relift {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw contract_error("model: " + what); }

std::string label_set_text(const std::vector<std::string>& labels, std::uint32_t mask) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    if (out.size() > 1) out += ",";
    out += labels[i];
  }
  return out + "}";
}

std::uint32_t parse_subset(const ordered_json& arr, const std::vector<std::string>& labels,
                           const std::string& at) {
  if (!arr.is_array()) bad("structure at '" + at + "' expects arrays of state labels");
  std::uint32_t mask = 0;
  for (const auto& item : arr) {
    if (!item.is_string()) bad("structure at '" + at + "' expects state labels");
    const auto pos = std::find(labels.begin(), labels.end(), item.get<std::string>());
    if (pos == labels.end()) {
      bad("structure at '" + at + "' mentions unknown state '" + item.get<std::string>() + "'");
    }
    const std::uint32_t bit = 1u << (pos - labels.begin());
    if (mask & bit) bad("structure at '" + at + "' repeats state '" + item.get<std::string>() + "'");
    mask |= bit;
  }
  return mask;
}

Value subset_value(std::uint32_t mask, std::size_t n) {
  std::vector<Value> atoms;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1u) atoms.push_back(Value::atom(i));
  }
  return Value::set(std::move(atoms));
}

std::vector<std::uint32_t> parse_family(const ordered_json& arr,
                                        const std::vector<std::string>& labels,
                                        const std::string& at) {
  if (!arr.is_array()) bad("structure at '" + at + "' expects an array of subsets");
  std::vector<std::uint32_t> family;
  for (const auto& sub : arr) {
    const std::uint32_t mask = parse_subset(sub, labels, at);
    if (std::find(family.begin(), family.end(), mask) != family.end()) {
      bad("structure at '" + at + "' repeats the subset " + label_set_text(labels, mask));
    }
    family.push_back(mask);
  }
  return family;
}

}  // namespace

ModelDocument::ModelDocument(std::vector<std::string> labels, Coalgebra coalgebra)
    : labels_(std::move(labels)), coalgebra_(std::move(coalgebra)) {
  if (labels_.size() != coalgebra_.states().size()) {
    bad("label list and state space disagree");
  }
}

ModelDocument ModelDocument::from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");
  if (doc.contains("version") && !(doc["version"].is_number_integer() && doc["version"] == 1)) {
    bad("unsupported version (expected 1)");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "version" && key != "functor" && key != "states" && key != "structure") {
      bad("unknown field '" + key + "'");
    }
  }
  if (!doc.contains("functor") || !doc["functor"].is_string()) bad("missing functor name");
  if (!doc.contains("states") || !doc["states"].is_array()) bad("missing state list");
  if (!doc.contains("structure") || !doc["structure"].is_object()) bad("missing structure object");

  const std::string fname = doc["functor"].get<std::string>();
  if (fname != "P" && fname != "N" && fname != "M") {
    bad("unknown functor '" + fname + "' (models support P, N, M)");
  }

  std::vector<std::string> labels;
  for (const auto& s : doc["states"]) {
    if (!s.is_string()) bad("state labels must be strings");
    labels.push_back(s.get<std::string>());
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    bad("duplicate state label");
  }
  if (labels.size() > 30) bad("too many states for a model document");

  const auto& st = doc["structure"];
  for (const auto& [key, _] : st.items()) {
    if (std::find(labels.begin(), labels.end(), key) == labels.end()) {
      bad("structure mentions unknown state '" + key + "'");
    }
  }
  for (const auto& label : labels) {
    if (!st.contains(label)) bad("structure is missing state '" + label + "'");
  }

  const std::size_t n = labels.size();
  std::vector<Value> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(Value::atom(i));
  const FiniteSet X = FiniteSet::of(std::move(atoms));
  const FunctorPtr F = functor_by_name(fname);
  const FiniteSet FX = F->carrier(X);  // rejects oversized models before any 2^n walk

  std::vector<Value> successors;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& entry = st[labels[i]];
    if (fname == "P") {
      successors.push_back(subset_value(parse_subset(entry, labels, labels[i]), n));
      continue;
    }
    std::vector<std::uint32_t> family = parse_family(entry, labels, labels[i]);
    if (fname == "M") {
      // up-closure is validated, never repaired
      const std::uint32_t all = (1u << n) - 1u;
      for (const std::uint32_t u : family) {
        for (std::uint32_t grow = u;; grow = (grow + 1) | u) {
          if (std::find(family.begin(), family.end(), grow) == family.end()) {
            bad("structure at '" + labels[i] + "' is not up-closed: contains " +
                label_set_text(labels, u) + " but is missing " + label_set_text(labels, grow));
          }
          if (grow == all) break;
        }
      }
    }
    std::vector<Value> members;
    members.reserve(family.size());
    for (const std::uint32_t u : family) members.push_back(subset_value(u, n));
    successors.push_back(Value::set(std::move(members)));
  }

  const Function structure = Function::from_map(
      X, FX, [&](const Value& x) { return successors[X.index_of_checked(x, "state")]; });
  return ModelDocument(std::move(labels), Coalgebra(F, X, structure));
}

std::string ModelDocument::to_json() const {
  const std::string fname = coalgebra_.functor()->name();
  ordered_json doc;
  doc["version"] = 1;
  doc["functor"] = fname;
  doc["states"] = labels_;

  const auto subset_array = [&](const Value& sub) {
    std::vector<std::size_t> ix;
    for (const auto& x : sub.elements()) ix.push_back(coalgebra_.states().index_of_checked(x, "state"));
    std::sort(ix.begin(), ix.end());
    ordered_json arr = ordered_json::array();
    for (const std::size_t i : ix) arr.push_back(labels_[i]);
    return arr;
  };

  ordered_json st = ordered_json::object();
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const Value& succ = coalgebra_.step(coalgebra_.states().at(i));
    if (fname == "P") {
      st[labels_[i]] = subset_array(succ);
      continue;
    }
    // order the family by subset mask, empty set first
    std::vector<std::pair<std::uint32_t, const Value*>> members;
    for (const auto& sub : succ.elements()) {
      std::uint32_t mask = 0;
      for (const auto& x : sub.elements()) {
        mask |= 1u << coalgebra_.states().index_of_checked(x, "state");
      }
      members.emplace_back(mask, &sub);
    }
    std::sort(members.begin(), members.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    ordered_json fam = ordered_json::array();
    for (const auto& [mask, sub] : members) fam.push_back(subset_array(*sub));
    st[labels_[i]] = fam;
  }
  doc["structure"] = st;
  return doc.dump(2);
}

const std::string& ModelDocument::label_of(const Value& state) const {
  return labels_[coalgebra_.states().index_of_checked(state, "state")];
}

Coalgebra parse_model(const std::string& json_text) {
  return ModelDocument::from_json(json_text).coalgebra();
}

}  // namespace relift
