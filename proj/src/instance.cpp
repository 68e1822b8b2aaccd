#include "fg/instance.hpp"

#include "fg/error.hpp"
#include "fg/field.hpp"
#include "fg/geom_graphs.hpp"

#include <regex>

namespace fg {

namespace {

std::string object_suffix(Instance::Object o) {
  switch (o) {
    case Instance::Object::Points: return "";
    case Instance::Object::Flags: return "/opp";
    case Instance::Object::Lines: return "/lines";
    case Instance::Object::Planes: return "/planes";
    case Instance::Object::Caps: return "/caps";
  }
  return "";
}

Instance::Object parse_object(const std::string& s) {
  if (s.empty() || s == "points" || s == "collinearity") return Instance::Object::Points;
  if (s == "opp" || s == "flags" || s == "oppositeness") return Instance::Object::Flags;
  if (s == "lines") return Instance::Object::Lines;
  if (s == "planes") return Instance::Object::Planes;
  if (s == "caps" || s == "cap") return Instance::Object::Caps;
  throw Error(Errc::Parse, "unknown object '" + s + "'");
}

void check(const Instance& in) {
  if (in.projective) {
    require(in.r >= 2, Errc::Parse, "PG(r,q) needs r >= 2");
    require(in.object != Instance::Object::Flags, Errc::Parse, "/opp needs a polar space");
    require(in.object != Instance::Object::Planes || in.r == 5, Errc::Parse, "/planes is defined for PG(5,q)");
  } else {
    require(in.rank >= 1, Errc::Parse, "polar rank must be positive");
    require(in.object == Instance::Object::Points || in.object == Instance::Object::Flags, Errc::Parse,
            "polar spaces support points and /opp");
  }
}

}  // namespace

TypeExponent Instance::t() const {
  switch (family) {
    case PolarFamily::Symplectic:
    case PolarFamily::Parabolic: return {2};
    case PolarFamily::Hyperbolic: return {0};
    case PolarFamily::Elliptic: return {4};
    case PolarFamily::Hermitian: return {odd_hermitian ? 3 : 1};
  }
  return {};
}

std::string Instance::name() const {
  std::string base;
  if (projective) {
    base = "PG(" + std::to_string(r) + "," + std::to_string(q) + ")";
  } else {
    auto nm = [&](const char* s, unsigned dim) { return std::string(s) + "(" + std::to_string(dim) + "," + std::to_string(q) + ")"; };
    switch (family) {
      case PolarFamily::Symplectic: base = nm("W", 2 * rank - 1); break;
      case PolarFamily::Parabolic: base = nm("Q", 2 * rank); break;
      case PolarFamily::Hyperbolic: base = nm("Q+", 2 * rank - 1); break;
      case PolarFamily::Elliptic: base = nm("Q-", 2 * rank + 1); break;
      case PolarFamily::Hermitian: base = nm("H", odd_hermitian ? 4 : 3); break;
    }
  }
  return base + (projective && object == Object::Caps ? "" : object_suffix(object));
}

Instance parse_instance(const std::string& text) {
  static const std::regex re(R"(^\s*(PG|W|Q\+|Q-|Q|H)\((\d+),(\d+)\)(?:/(\w+))?\s*$)");
  std::smatch m;
  require(std::regex_match(text, m, re), Errc::Parse, "cannot parse instance '" + text + "'");
  Instance in;
  const std::string f = m[1];
  const unsigned dim = static_cast<unsigned>(std::stoul(m[2]));
  in.q = static_cast<unsigned>(std::stoul(m[3]));
  const std::string obj = m[4].matched ? std::string(m[4]) : "";
  if (f == "PG") {
    in.projective = true;
    in.r = dim;
    in.object = obj.empty() ? Instance::Object::Caps : parse_object(obj);
  } else {
    in.object = parse_object(obj);
    if (f == "W") {
      require(dim % 2 == 1 && dim >= 3, Errc::Parse, "W(n,q) needs odd n >= 3");
      in.family = PolarFamily::Symplectic;
      in.rank = (dim + 1) / 2;
    } else if (f == "Q") {
      require(dim % 2 == 0 && dim >= 2, Errc::Parse, "Q(n,q) needs even n >= 2");
      in.family = PolarFamily::Parabolic;
      in.rank = dim / 2;
    } else if (f == "Q+") {
      require(dim % 2 == 1 && dim >= 3, Errc::Parse, "Q+(n,q) needs odd n >= 3");
      in.family = PolarFamily::Hyperbolic;
      in.rank = (dim + 1) / 2;
    } else if (f == "Q-") {
      require(dim % 2 == 1 && dim >= 3, Errc::Parse, "Q-(n,q) needs odd n >= 3");
      in.family = PolarFamily::Elliptic;
      in.rank = (dim - 1) / 2;
    } else {
      require(dim == 3 || dim == 4, Errc::Parse, "hermitian spaces are H(3,q) and H(4,q)");
      in.family = PolarFamily::Hermitian;
      in.rank = 2;
      in.odd_hermitian = dim == 4;
    }
  }
  check(in);
  return in;
}

Instance make_instance(const std::string& family, unsigned rank_or_r, unsigned q, const std::string& object,
                       bool odd_hermitian) {
  Instance in;
  in.q = q;
  if (family == "pg") {
    in.projective = true;
    in.r = rank_or_r;
    in.object = object.empty() ? Instance::Object::Caps : parse_object(object);
  } else {
    in.family = parse_family(family);
    in.rank = rank_or_r;
    in.odd_hermitian = odd_hermitian;
    in.object = parse_object(object);
  }
  check(in);
  return in;
}

std::shared_ptr<const PolarSpace> instance_polar(const Instance& in) {
  require(!in.projective, Errc::Precondition, in.name() + " is not a polar space");
  return build_polar_space(PolarSpaceSpec::standard(in.family, in.rank, make_field_of_order(in.q), in.odd_hermitian));
}

ProjSpacePtr instance_pg(const Instance& in) {
  require(in.projective, Errc::Precondition, in.name() + " is not a projective space");
  return build_pg(in.r, make_field_of_order(in.q));
}

DenseGraph instance_graph(const Instance& in) {
  switch (in.object) {
    case Instance::Object::Points: return collinearity_graph(*instance_polar(in));
    case Instance::Object::Flags: return oppositeness_graph(*instance_polar(in));
    case Instance::Object::Lines: return subspace_intersection_graph(*instance_pg(in), 2);
    case Instance::Object::Planes: return subspace_intersection_graph(*instance_pg(in), 3);
    case Instance::Object::Caps: break;
  }
  throw Error(Errc::Precondition, in.name() + " is a hypergraph instance");
}

TripleHypergraph instance_hypergraph(const Instance& in) {
  require(in.object == Instance::Object::Caps, Errc::Precondition, in.name() + " is a graph instance");
  return cap_hypergraph(instance_pg(in));
}

ClosedFormParams instance_closed_form(const Instance& in) {
  switch (in.object) {
    case Instance::Object::Points: return closed_form_params(GraphKind::Collinearity, in.rank, in.t(), in.q);
    case Instance::Object::Flags: return closed_form_params(GraphKind::Oppositeness, in.rank, in.t(), in.q);
    case Instance::Object::Lines: return closed_form_params(GraphKind::Lines, in.r + 1, {}, in.q);
    case Instance::Object::Planes: return closed_form_params(GraphKind::Planes, in.r + 1, {}, in.q);
    case Instance::Object::Caps: break;
  }
  throw Error(Errc::Precondition, in.name() + " has no closed-form spectrum");
}

}  // namespace fg
