#include "relift/registry.hpp"

#include "relift/errors.hpp"
#include "relift/functor.hpp"
#include "relift/nat_trans.hpp"

namespace relift {

namespace {

std::vector<RegisteredLifting> powerset_family() {
  const FunctorPtr P = powerset_functor();
  std::vector<RegisteredLifting> out;
  out.push_back({barr_lift(P)});
  out.push_back({top_lift(P)});
  out.push_back({egli_milner_lift()});
  out.push_back({hoare_lift()});
  out.push_back({smyth_lift()});
  out.push_back({meet_lift({hoare_lift(), smyth_lift()})});
  out.push_back({twiddle_lift(barr_lift(P))});
  return out;
}

std::vector<RegisteredLifting> neighbourhood_family() {
  std::vector<RegisteredLifting> out;
  out.push_back({top_lift(neighbourhood_functor())});
  for (unsigned j = 0; j < 16; ++j) out.push_back({lj_lift(j)});
  // Barr over N is oplax in general: constructible, no asserted verdict.
  out.push_back({barr_lift(neighbourhood_functor()), true});
  return out;
}

std::vector<RegisteredLifting> monotone_family() {
  const NatTransPtr iota = inclusion_monotone_to_neighbourhood();
  std::vector<RegisteredLifting> out;
  out.push_back({mtilde_lift()});
  out.push_back({top_lift(monotone_neighbourhood_functor())});
  for (unsigned j = 0; j < 16; ++j) out.push_back({transport_lift(iota, lj_lift(j))});
  out.push_back({meet_lift({transport_lift(iota, lj_lift(9)), transport_lift(iota, lj_lift(6))})});
  out.push_back({meet_lift({transport_lift(iota, lj_lift(1)), transport_lift(iota, lj_lift(2)),
                            transport_lift(iota, lj_lift(4)), transport_lift(iota, lj_lift(8))})});
  return out;
}

std::vector<RegisteredLifting> identity_family() {
  const FunctorPtr Id = identity_functor();
  const NatTransPtr eta = singleton_into_powerset();
  std::vector<RegisteredLifting> out;
  out.push_back({barr_lift(Id)});
  out.push_back({top_lift(Id)});
  out.push_back({transport_lift(eta, barr_lift(powerset_functor()))});
  out.push_back({transport_lift(eta, egli_milner_lift())});
  return out;
}

}  // namespace

std::vector<RegisteredLifting> lifting_registry(const std::string& functor_name) {
  if (functor_name == "P") return powerset_family();
  if (functor_name == "N") return neighbourhood_family();
  if (functor_name == "M") return monotone_family();
  if (functor_name == "Id") return identity_family();
  throw contract_error("no lifting registry for functor '" + functor_name + "'");
}

const std::vector<std::string>& registry_functor_names() {
  static const std::vector<std::string> names = {"P", "N", "M", "Id"};
  return names;
}

}  // namespace relift
