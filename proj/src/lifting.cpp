#include "relift/lifting.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "relift/errors.hpp"

namespace relift {

namespace {

/// Memo for liftings whose output ignores the pairs of R and depends only
/// on the carriers.
class CarrierMemo {
 public:
  Relation get(const FiniteSet& X, const FiniteSet& Y,
               const std::function<Relation()>& build) const {
    const std::pair<Value, Value> key{X.as_value(), Y.as_value()};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    Relation built = build();
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(key, std::move(built)).first->second;
  }

 private:
  mutable std::mutex mu_;
  mutable std::map<std::pair<Value, Value>, Relation> cache_;
};

/// Per-row target masks {j | i R j} and per-column source masks {i | i R j}.
/// Base sets are view-guarded, so 32-bit masks always fit.
struct EdgeMasks {
  std::vector<std::uint32_t> row;  // source index -> target mask
  std::vector<std::uint32_t> col;  // target index -> source mask

  explicit EdgeMasks(const Relation& R)
      : row(R.source().size(), 0), col(R.target().size(), 0) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::size_t j = 0; j < col.size(); ++j) {
        if (R.contains(i, j)) {
          row[i] |= 1u << j;
          col[j] |= 1u << i;
        }
      }
    }
  }

  std::uint32_t succ_of(std::uint32_t source_mask) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (source_mask >> i & 1u) out |= row[i];
    }
    return out;
  }

  std::uint32_t pred_of(std::uint32_t target_mask) const {
    std::uint32_t out = 0;
    for (std::size_t j = 0; j < col.size(); ++j) {
      if (target_mask >> j & 1u) out |= col[j];
    }
    return out;
  }
};

class TopLift final : public Lifting {
 public:
  explicit TopLift(FunctorPtr F) : F_(std::move(F)) {}

  const std::string& name() const override {
    static const std::string n = "top";
    return n;
  }
  const FunctorPtr& functor() const override { return F_; }

  Relation lift_of(const Relation& R) const override {
    return memo_.get(R.source(), R.target(), [&] {
      return Relation::full(F_->carrier(R.source()), F_->carrier(R.target()));
    });
  }

 private:
  FunctorPtr F_;
  CarrierMemo memo_;
};

class BarrLift final : public Lifting {
 public:
  explicit BarrLift(FunctorPtr F) : F_(std::move(F)) {}

  const std::string& name() const override {
    static const std::string n = "barr";
    return n;
  }
  const FunctorPtr& functor() const override { return F_; }

  Relation lift_of(const Relation& R) const override {
    const FiniteSet pairs = R.pair_set();
    const Function p1 =
        Function::from_map(pairs, R.source(), [](const Value& p) { return p.first(); });
    const Function p2 =
        Function::from_map(pairs, R.target(), [](const Value& p) { return p.second(); });
    const Function Fp1 = F_->map(p1);
    const Function Fp2 = F_->map(p2);
    const std::size_t rows = Fp1.target().size();
    std::vector<bool> hit(rows * Fp2.target().size(), false);
    for (std::size_t w = 0; w < Fp1.source().size(); ++w) {
      hit[Fp1.apply_index(w) * Fp2.target().size() + Fp2.apply_index(w)] = true;
    }
    return Relation::build(Fp1.target(), Fp2.target(), [&](std::size_t i, std::size_t j) {
      return bool(hit[i * Fp2.target().size() + j]);
    });
  }

 private:
  FunctorPtr F_;
};

/// Subset liftings of P given by the forth clause (every x in u has an
/// R-successor in v), the back clause (every y in v has an R-predecessor in
/// u), or their conjunction.
class SubsetClauseLift final : public Lifting {
 public:
  SubsetClauseLift(std::string name, bool forth, bool back)
      : name_(std::move(name)), F_(powerset_functor()), forth_(forth), back_(back) {}

  const std::string& name() const override { return name_; }
  const FunctorPtr& functor() const override { return F_; }

  Relation lift_of(const Relation& R) const override {
    auto vx = powerset_view(R.source());
    auto vy = powerset_view(R.target());
    const EdgeMasks edges(R);
    return Relation::build(vx->carrier, vy->carrier, [&](std::size_t i, std::size_t j) {
      const std::uint32_t u = vx->mask_of[i];
      const std::uint32_t v = vy->mask_of[j];
      if (forth_) {
        for (std::size_t x = 0; x < edges.row.size(); ++x) {
          if ((u >> x & 1u) && (edges.row[x] & v) == 0) return false;
        }
      }
      if (back_) {
        for (std::size_t y = 0; y < edges.col.size(); ++y) {
          if ((v >> y & 1u) && (edges.col[y] & u) == 0) return false;
        }
      }
      return true;
    });
  }

 private:
  std::string name_;
  FunctorPtr F_;
  bool forth_;
  bool back_;
};

class MtildeLift final : public Lifting {
 public:
  MtildeLift() : F_(monotone_neighbourhood_functor()) {}

  const std::string& name() const override {
    static const std::string n = "mtilde";
    return n;
  }
  const FunctorPtr& functor() const override { return F_; }

  Relation lift_of(const Relation& R) const override {
    auto mx = monotone_view(R.source());
    auto my = monotone_view(R.target());
    const EdgeMasks edges(R);
    // Per source subset: which target elements are reachable; per target
    // subset: which source elements reach it.
    std::vector<std::uint32_t> pred_of_u(mx->inner->carrier.size());
    for (std::size_t i = 0; i < pred_of_u.size(); ++i) {
      pred_of_u[i] = edges.succ_of(mx->inner->mask_of[i]);
    }
    std::vector<std::uint32_t> succ_of_v(my->inner->carrier.size());
    for (std::size_t j = 0; j < succ_of_v.size(); ++j) {
      succ_of_v[j] = edges.pred_of(my->inner->mask_of[j]);
    }
    return Relation::build(mx->carrier, my->carrier, [&](std::size_t ui, std::size_t vi) {
      const std::uint32_t U = mx->family_of[ui];
      const std::uint32_t V = my->family_of[vi];
      for (std::size_t i = 0; i < pred_of_u.size(); ++i) {
        if (!(U >> i & 1u)) continue;
        bool found = false;
        for (std::size_t j = 0; j < succ_of_v.size() && !found; ++j) {
          found = (V >> j & 1u) && (my->inner->mask_of[j] & ~pred_of_u[i]) == 0;
        }
        if (!found) return false;
      }
      for (std::size_t j = 0; j < succ_of_v.size(); ++j) {
        if (!(V >> j & 1u)) continue;
        bool found = false;
        for (std::size_t i = 0; i < pred_of_u.size() && !found; ++i) {
          found = (U >> i & 1u) && (mx->inner->mask_of[i] & ~succ_of_v[j]) == 0;
        }
        if (!found) return false;
      }
      return true;
    });
  }

 private:
  FunctorPtr F_;
};

class LJLift final : public Lifting {
 public:
  explicit LJLift(unsigned j_mask) : j_mask_(j_mask), F_(neighbourhood_functor()) {
    if (j_mask > 15) throw contract_error("LJ index must be between 0 and 15");
    name_ = "LJ:" + std::to_string(j_mask);
  }

  const std::string& name() const override { return name_; }
  const FunctorPtr& functor() const override { return F_; }

  Relation lift_of(const Relation& R) const override {
    return memo_.get(R.source(), R.target(), [&] { return build_table(R); });
  }

 private:
  Relation build_table(const Relation& R) const {
    auto nx = neighbourhood_view(R.source());
    auto ny = neighbourhood_view(R.target());
    const std::size_t x_empty = nx->inner->index_of(0);
    const std::size_t x_full = nx->inner->index_of(nx->inner->full_mask());
    const std::size_t y_empty = ny->inner->index_of(0);
    const std::size_t y_full = ny->inner->index_of(ny->inner->full_mask());
    return Relation::build(nx->carrier, ny->carrier, [&](std::size_t ui, std::size_t vi) {
      const std::uint32_t U = nx->family_of[ui];
      const std::uint32_t V = ny->family_of[vi];
      const bool u_bot = U >> x_empty & 1u;
      const bool u_top = U >> x_full & 1u;
      const bool v_bot = V >> y_empty & 1u;
      const bool v_top = V >> y_full & 1u;
      for (unsigned r = 0; r < 4; ++r) {
        if (!(j_mask_ >> r & 1u)) continue;
        const RhoFormula rho = RhoFormula::from_index(r);
        const bool u0 = rho.negated_bot ? !u_bot : u_bot;
        const bool v0 = rho.negated_bot ? !v_bot : v_bot;
        const bool u1 = rho.negated_top ? !u_top : u_top;
        const bool v1 = rho.negated_top ? !v_top : v_top;
        // a system satisfies a pair formula when either literal holds at it;
        // the lifted clause asks satisfaction to carry over from U to V
        if ((u0 || u1) && !(v0 || v1)) return false;
      }
      return true;
    });
  }

  unsigned j_mask_;
  FunctorPtr F_;
  std::string name_;
  CarrierMemo memo_;
};

class MeetLift final : public Lifting {
 public:
  explicit MeetLift(std::vector<LiftingPtr> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw contract_error("meet requires at least one lifting");
    name_ = "meet(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (!parts_[i]) throw contract_error("meet over a null lifting");
      if (parts_[i]->functor()->name() != parts_[0]->functor()->name()) {
        throw contract_error("meet requires liftings over one functor, got " +
                             parts_[0]->functor()->name() + " and " +
                             parts_[i]->functor()->name());
      }
      name_ += (i ? "," : "") + parts_[i]->name();
    }
    name_ += ")";
  }

  const std::string& name() const override { return name_; }
  const FunctorPtr& functor() const override { return parts_[0]->functor(); }

  Relation lift_of(const Relation& R) const override {
    Relation out = parts_[0]->lift_of(R);
    for (std::size_t i = 1; i < parts_.size(); ++i) {
      out = out.intersect(parts_[i]->lift_of(R));
    }
    return out;
  }

 private:
  std::vector<LiftingPtr> parts_;
  std::string name_;
};

class TwiddleLift final : public Lifting {
 public:
  explicit TwiddleLift(LiftingPtr inner) : inner_(std::move(inner)) {
    if (!inner_) throw contract_error("twiddle of a null lifting");
    name_ = "twiddle(" + inner_->name() + ")";
  }

  const std::string& name() const override { return name_; }
  const FunctorPtr& functor() const override { return inner_->functor(); }

  Relation lift_of(const Relation& R) const override {
    return converse(inner_->lift_of(converse(R)));
  }

 private:
  LiftingPtr inner_;
  std::string name_;
};

class TransportLift final : public Lifting {
 public:
  TransportLift(NatTransPtr eta, LiftingPtr inner)
      : eta_(std::move(eta)), inner_(std::move(inner)) {
    if (!eta_ || !inner_) throw contract_error("transport of a null argument");
    if (inner_->functor()->name() != eta_->target()->name()) {
      throw contract_error("transport: lifting is over " + inner_->functor()->name() +
                           " but the transformation targets " + eta_->target()->name());
    }
    name_ = "transport(" + eta_->name() + "," + inner_->name() + ")";
  }

  const std::string& name() const override { return name_; }
  const FunctorPtr& functor() const override { return eta_->source(); }

  Relation lift_of(const Relation& R) const override {
    const Function hx = eta_->component(R.source());
    const Function hy = eta_->component(R.target());
    const Relation lifted = inner_->lift_of(R);
    return Relation::build(hx.source(), hy.source(), [&](std::size_t i, std::size_t j) {
      return lifted.contains(hx.apply_index(i), hy.apply_index(j));
    });
  }

 private:
  NatTransPtr eta_;
  LiftingPtr inner_;
  std::string name_;
};

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) {
      throw contract_error("lifting expression: expected '" + std::string(1, c) + "' at offset " +
                           std::to_string(pos) + " in '" + s + "'");
    }
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) != 0)) ++pos;
    if (start == pos) {
      throw contract_error("lifting expression: expected a name at offset " +
                           std::to_string(pos) + " in '" + s + "'");
    }
    return s.substr(start, pos - start);
  }
};

void require_functor(const FunctorPtr& F, const std::string& expected, const std::string& what) {
  if (F->name() != expected) {
    throw contract_error(what + " is a lifting of " + expected + ", not " + F->name());
  }
}

LiftingPtr parse_expr(Parser& p, const FunctorPtr& F) {
  const std::string head = p.word();
  if (head == "top") return top_lift(F);
  if (head == "barr") return barr_lift(F);
  if (head == "em") {
    require_functor(F, "P", "em");
    return egli_milner_lift();
  }
  if (head == "hoare") {
    require_functor(F, "P", "hoare");
    return hoare_lift();
  }
  if (head == "smyth") {
    require_functor(F, "P", "smyth");
    return smyth_lift();
  }
  if (head == "mtilde") {
    require_functor(F, "M", "mtilde");
    return mtilde_lift();
  }
  if (head == "LJ") {
    require_functor(F, "N", "LJ");
    p.expect(':');
    const std::string digits = p.word();
    if (digits.find_first_not_of("0123456789") != std::string::npos) {
      throw contract_error("LJ index must be a number, got '" + digits + "'");
    }
    const unsigned long j = std::stoul(digits);
    if (j > 15) throw contract_error("LJ index must be between 0 and 15, got " + digits);
    return lj_lift(static_cast<unsigned>(j));
  }
  if (head == "meet") {
    p.expect('(');
    std::vector<LiftingPtr> parts;
    parts.push_back(parse_expr(p, F));
    while (p.eat(',')) parts.push_back(parse_expr(p, F));
    p.expect(')');
    return meet_lift(std::move(parts));
  }
  if (head == "twiddle") {
    p.expect('(');
    LiftingPtr inner = parse_expr(p, F);
    p.expect(')');
    return twiddle_lift(std::move(inner));
  }
  if (head == "transport") {
    p.expect('(');
    const std::string eta_name = p.word();
    NatTransPtr eta;
    if (eta_name == "iota") {
      eta = inclusion_monotone_to_neighbourhood();
    } else if (eta_name == "singleton") {
      eta = singleton_into_powerset();
    } else {
      throw contract_error("unknown transformation '" + eta_name +
                           "' (expected iota or singleton)");
    }
    if (eta->source()->name() != F->name()) {
      throw contract_error("transport along " + eta_name + " yields a lifting of " +
                           eta->source()->name() + ", not " + F->name());
    }
    p.expect(',');
    LiftingPtr inner = parse_expr(p, eta->target());
    p.expect(')');
    return transport_lift(std::move(eta), std::move(inner));
  }
  throw contract_error("unknown lifting '" + head + "'");
}

}  // namespace

RhoFormula RhoFormula::from_index(unsigned i) {
  if (i > 3) throw contract_error("RhoFormula index must be between 0 and 3");
  return {(i & 2u) != 0, (i & 1u) != 0};
}

std::string RhoFormula::text() const {
  return std::string("(") + (negated_bot ? "neg-box-bot" : "box-bot") + "," +
         (negated_top ? "neg-box-top" : "box-top") + ")";
}

LiftingPtr top_lift(FunctorPtr F) {
  if (!F) throw contract_error("top lifting of a null functor");
  return std::make_shared<TopLift>(std::move(F));
}

LiftingPtr barr_lift(FunctorPtr F) {
  if (!F) throw contract_error("barr lifting of a null functor");
  return std::make_shared<BarrLift>(std::move(F));
}

LiftingPtr egli_milner_lift() {
  static const LiftingPtr l = std::make_shared<SubsetClauseLift>("em", true, true);
  return l;
}

LiftingPtr hoare_lift() {
  static const LiftingPtr l = std::make_shared<SubsetClauseLift>("hoare", true, false);
  return l;
}

LiftingPtr smyth_lift() {
  static const LiftingPtr l = std::make_shared<SubsetClauseLift>("smyth", false, true);
  return l;
}

LiftingPtr mtilde_lift() {
  static const LiftingPtr l = std::make_shared<MtildeLift>();
  return l;
}

LiftingPtr lj_lift(unsigned j_mask) { return std::make_shared<LJLift>(j_mask); }

LiftingPtr meet_lift(std::vector<LiftingPtr> parts) {
  return std::make_shared<MeetLift>(std::move(parts));
}

LiftingPtr twiddle_lift(LiftingPtr inner) {
  return std::make_shared<TwiddleLift>(std::move(inner));
}

LiftingPtr transport_lift(NatTransPtr eta, LiftingPtr inner) {
  return std::make_shared<TransportLift>(std::move(eta), std::move(inner));
}

Value mtilde_witness(const Relation& R, const Value& U, const Value& V) {
  if (!R.is_total()) throw contract_error("mtilde witness requires a total relation");
  if (!R.is_surjective()) throw contract_error("mtilde witness requires a surjective relation");
  auto mx = monotone_view(R.source());
  auto my = monotone_view(R.target());
  const std::uint32_t u_fam = mx->family_of_value(U, "mtilde witness U");
  const std::uint32_t v_fam = my->family_of_value(V, "mtilde witness V");
  const Relation lifted = mtilde_lift()->lift_of(R);
  if (!lifted.contains(U, V)) {
    throw contract_error("mtilde witness requires (U,V) in the lifted relation");
  }

  const FiniteSet pairs = R.pair_set();
  auto pv = powerset_view(pairs);
  std::vector<std::size_t> first_of(pairs.size()), second_of(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    first_of[k] = R.source().index_of_checked(pairs.at(k).first(), "mtilde witness");
    second_of[k] = R.target().index_of_checked(pairs.at(k).second(), "mtilde witness");
  }

  std::vector<std::uint32_t> seeds;
  for (std::size_t i = 0; i < mx->inner->carrier.size(); ++i) {
    if (!(u_fam >> i & 1u)) continue;
    std::uint32_t seed = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mx->inner->mask_of[i] >> first_of[k] & 1u) seed |= 1u << k;
    }
    seeds.push_back(seed);
  }
  for (std::size_t j = 0; j < my->inner->carrier.size(); ++j) {
    if (!(v_fam >> j & 1u)) continue;
    std::uint32_t seed = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (my->inner->mask_of[j] >> second_of[k] & 1u) seed |= 1u << k;
    }
    seeds.push_back(seed);
  }

  std::vector<Value> members;
  for (std::size_t w = 0; w < pv->carrier.size(); ++w) {
    const std::uint32_t w_mask = pv->mask_of[w];
    for (const std::uint32_t seed : seeds) {
      if ((seed & ~w_mask) == 0) {
        members.push_back(pv->carrier.at(w));
        break;
      }
    }
  }
  return Value::set(std::move(members));
}

LiftingPtr parse_lifting(const std::string& text, const FunctorPtr& functor) {
  if (!functor) throw contract_error("lifting expression needs a functor context");
  Parser p{text};
  LiftingPtr out = parse_expr(p, functor);
  p.skip_ws();
  if (p.pos != text.size()) {
    throw contract_error("lifting expression: trailing characters at offset " +
                         std::to_string(p.pos) + " in '" + text + "'");
  }
  return out;
}

}  // namespace relift
