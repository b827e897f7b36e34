#include "wgs/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wgs {

namespace {

const Json& member(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object())
    throw ParseError(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError(path + "." + name, "missing field");
  return *it;
}

long long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw ParseError(path, "expected an integer");
  return j.get<long long>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string())
    throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

std::vector<Index> index_list(const Json& j, const std::string& path) {
  if (!j.is_array())
    throw ParseError(path, "expected an array");
  std::vector<Index> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Elem> elem_list(const Json& j, const std::string& path) {
  std::vector<Elem> out;
  for (Index v : index_list(j, path))
    out.push_back(Elem{static_cast<int>(v)});
  return out;
}

std::vector<std::pair<Index, Elem>> pair_list(const Json& j,
                                              const std::string& path) {
  if (!j.is_array())
    throw ParseError(path, "expected an array of [index, element] pairs");
  std::vector<std::pair<Index, Elem>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2)
      throw ParseError(at, "expected an [index, element] pair");
    out.emplace_back(as_int(j[i][0], at + "[0]"),
                     Elem{static_cast<int>(as_int(j[i][1], at + "[1]"))});
  }
  return out;
}

std::vector<int> bit_list(const Json& j, const std::string& path) {
  std::vector<int> out;
  for (Index v : index_list(j, path)) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

RingSpec parse_ring_spec(const Json& j, const std::string& path) {
  std::string kind = as_string(member(j, "kind", path), path + ".kind");
  if (kind == "zmod") {
    return RingSpec::zmod(
        static_cast<int>(as_int(member(j, "m", path), path + ".m")));
  }
  if (kind == "gf") {
    std::vector<int> irr;
    for (Index v :
         index_list(member(j, "irreducible", path), path + ".irreducible"))
      irr.push_back(static_cast<int>(v));
    return RingSpec::gf(
        static_cast<int>(as_int(member(j, "p", path), path + ".p")),
        static_cast<int>(as_int(member(j, "k", path), path + ".k")),
        std::move(irr));
  }
  throw ParseError(path + ".kind", "unknown ring kind '" + kind + "'");
}

Json ring_spec_json(const RingSpec& spec) {
  if (spec.kind == RingSpec::Kind::Zmod)
    return Json{{"kind", "zmod"}, {"m", spec.modulus}};
  return Json{{"kind", "gf"},
              {"p", spec.p},
              {"k", spec.k},
              {"irreducible", spec.irreducible}};
}

namespace {

IndexModel parse_index_model(const Json& j, const std::string& path) {
  std::string kind = as_string(member(j, "kind", path), path + ".kind");
  if (kind == "finite") {
    long long size = as_int(member(j, "size", path), path + ".size");
    if (size < 2) throw ParseError(path + ".size", "size >= 2 required");
    auto phi = index_list(member(j, "phi", path), path + ".phi");
    if (static_cast<long long>(phi.size()) != size)
      throw ParseError(path + ".phi", "length must equal size");
    return FiniteIndexModel{std::move(phi)};
  }
  if (kind == "cofinite_shift") {
    long long prefix = as_int(member(j, "prefix", path), path + ".prefix");
    auto table = index_list(member(j, "phi_table", path), path + ".phi_table");
    if (static_cast<long long>(table.size()) != prefix)
      throw ParseError(path + ".phi_table", "length must equal prefix");
    return CofiniteShiftIndexModel{
        std::move(table),
        as_int(member(j, "tail_offset", path), path + ".tail_offset")};
  }
  if (kind == "integer_shift") {
    IntegerShiftIndexModel m;
    m.lo = as_int(member(j, "lo", path), path + ".lo");
    m.hi = as_int(member(j, "hi", path), path + ".hi");
    m.phi_table = index_list(member(j, "phi_table", path), path + ".phi_table");
    m.tail_offset = as_int(member(j, "tail_offset", path), path + ".tail_offset");
    if (static_cast<long long>(m.phi_table.size()) != m.hi - m.lo)
      throw ParseError(path + ".phi_table", "length must equal hi - lo");
    return m;
  }
  throw ParseError(path + ".kind", "unknown index model '" + kind + "'");
}

WeightModel parse_weight_model(const Json& j, const IndexModel& index,
                               const std::string& path) {
  std::string kind = as_string(member(j, "kind", path), path + ".kind");
  if (kind == "finite") {
    auto values = elem_list(member(j, "values", path), path + ".values");
    if (auto* fi = std::get_if<FiniteIndexModel>(&index);
        !fi || fi->phi.size() != values.size())
      throw ParseError(path + ".values", "length must equal the index size");
    return FiniteWeightModel{std::move(values)};
  }
  if (kind == "cofinite_shift") {
    return CofiniteShiftWeightModel{
        elem_list(member(j, "weight_table", path), path + ".weight_table"),
        Elem{static_cast<int>(
            as_int(member(j, "weight_tail", path), path + ".weight_tail"))}};
  }
  if (kind == "integer_shift") {
    IntegerShiftWeightModel m;
    if (j.contains("lo")) {
      m.lo = as_int(j.at("lo"), path + ".lo");
    } else if (auto* ii = std::get_if<IntegerShiftIndexModel>(&index)) {
      m.lo = ii->lo;
    }
    m.table = elem_list(member(j, "weight_table", path), path + ".weight_table");
    m.tail_neg = Elem{static_cast<int>(
        as_int(member(j, "weight_tail_neg", path), path + ".weight_tail_neg"))};
    m.tail_pos = Elem{static_cast<int>(
        as_int(member(j, "weight_tail_pos", path), path + ".weight_tail_pos"))};
    return m;
  }
  throw ParseError(path + ".kind", "unknown weight model '" + kind + "'");
}

}  // namespace

System parse_system(const Json& j) {
  RingSpec spec = parse_ring_spec(member(j, "ring", "$"), "$.ring");
  Ring ring = [&] {
    try {
      return Ring(spec);
    } catch (const std::invalid_argument& e) {
      throw ParseError("$.ring", e.what());
    }
  }();
  IndexModel index = parse_index_model(member(j, "index", "$"), "$.index");
  WeightModel weights =
      parse_weight_model(member(j, "weights", "$"), index, "$.weights");
  try {
    return System(std::move(ring), std::move(index), std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw ParseError("$", e.what());
  }
}

System parse_system_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("$", "invalid JSON");
  return parse_system(j);
}

System load_system_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("$", "cannot open '" + file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system_text(ss.str());
}

Json system_json(const System& sys) {
  Json j;
  j["ring"] = ring_spec_json(sys.ring().spec());
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FiniteIndexModel>) {
          j["index"] = Json{{"kind", "finite"},
                            {"size", m.phi.size()},
                            {"phi", m.phi}};
        } else if constexpr (std::is_same_v<T, CofiniteShiftIndexModel>) {
          j["index"] = Json{{"kind", "cofinite_shift"},
                            {"prefix", m.phi_table.size()},
                            {"phi_table", m.phi_table},
                            {"tail_offset", m.tail_offset}};
        } else {
          j["index"] = Json{{"kind", "integer_shift"},
                            {"lo", m.lo},
                            {"hi", m.hi},
                            {"phi_table", m.phi_table},
                            {"tail_offset", m.tail_offset}};
        }
      },
      sys.index_model());
  auto elems = [](const std::vector<Elem>& es) {
    std::vector<int> out;
    for (Elem e : es) out.push_back(e.v);
    return out;
  };
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FiniteWeightModel>) {
          j["weights"] = Json{{"kind", "finite"}, {"values", elems(m.values)}};
        } else if constexpr (std::is_same_v<T, CofiniteShiftWeightModel>) {
          j["weights"] = Json{{"kind", "cofinite_shift"},
                              {"weight_table", elems(m.table)},
                              {"weight_tail", m.tail.v}};
        } else {
          j["weights"] = Json{{"kind", "integer_shift"},
                              {"lo", m.lo},
                              {"weight_table", elems(m.table)},
                              {"weight_tail_neg", m.tail_neg.v},
                              {"weight_tail_pos", m.tail_pos.v}};
        }
      },
      sys.weight_model());
  return j;
}

SetDescriptor parse_set(const Json& j, const std::string& path) {
  std::string kind = as_string(member(j, "kind", path), path + ".kind");
  if (kind == "finite") {
    std::vector<long long> members;
    for (Index v : index_list(member(j, "members", path), path + ".members"))
      members.push_back(v);
    return SetDescriptor::finite(std::move(members));
  }
  if (kind == "branch") {
    try {
      return SetDescriptor::branch(
          bit_list(member(j, "prefix", path), path + ".prefix"),
          bit_list(member(j, "period", path), path + ".period"));
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, e.what());
    }
  }
  throw ParseError(path + ".kind", "unknown set kind '" + kind + "'");
}

Json set_json(const SetDescriptor& s) {
  if (s.kind == SetDescriptor::Kind::FiniteSet)
    return Json{{"kind", "finite"}, {"members", s.members}};
  return Json{{"kind", "branch"}, {"prefix", s.prefix}, {"period", s.period}};
}

Config parse_config(const System& sys, const Json& j, const std::string& path) {
  try {
    if (j.contains("support"))
      return Config::finite_support(
          sys, pair_list(member(j, "support", path), path + ".support"));
    if (j.contains("nu"))
      return Config::triangular(
          sys, as_int(member(j, "nu", path), path + ".nu"),
          parse_set(member(j, "set", path), path + ".set"));
    if (j.contains("base"))
      return Config::orbit_bumped(
          sys, parse_config(sys, member(j, "base", path), path + ".base"),
          as_int(member(j, "theta", path), path + ".theta"),
          as_int(member(j, "start", path), path + ".start"));
    if (j.contains("classes")) {
      PeriodicWitnessData data;
      const Json& cs = member(j, "classes", path);
      for (size_t i = 0; i < cs.size(); ++i) {
        const std::string at = path + ".classes[" + std::to_string(i) + "]";
        PeriodicClassData cls;
        std::string kind = as_string(member(cs[i], "kind", at), at + ".kind");
        if (kind == "cycle")
          cls.kind = PeriodicClassData::Kind::Cycle;
        else if (kind == "one_sided")
          cls.kind = PeriodicClassData::Kind::OneSided;
        else if (kind == "bi_infinite")
          cls.kind = PeriodicClassData::Kind::BiInfinite;
        else
          throw ParseError(at + ".kind", "unknown class kind");
        cls.root = as_int(member(cs[i], "root", at), at + ".root");
        cls.base = elem_list(member(cs[i], "base", at), at + ".base");
        cls.seg_len = static_cast<long long>(cls.base.size());
        if (cls.base.empty()) throw ParseError(at + ".base", "must be nonempty");
        cls.shape = orbit_shape(sys, cls.root);
        if (cls.kind == PeriodicClassData::Kind::Cycle) {
          if (cls.shape.escapes || cls.shape.cycle_entry != 0 ||
              cls.seg_len != static_cast<long long>(cls.shape.points.size()))
            throw ParseError(at, "base must cover the cycle of the root");
        } else if (!cls.shape.escapes) {
          throw ParseError(at, "root must have an infinite forward orbit");
        }
        data.classes.push_back(std::move(cls));
      }
      return Config::periodic_witness(std::move(data));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(path, e.what());
  }
  throw ParseError(path, "unrecognized configuration literal");
}

Json config_json(const System& sys, const Config& c) {
  return std::visit(
      [&](const auto& d) -> Json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, FiniteSupportData>) {
          Json pairs = Json::array();
          for (auto [a, e] : d.pairs) pairs.push_back(Json::array({a, e.v}));
          return Json{{"support", pairs}};
        } else if constexpr (std::is_same_v<T, TriangularData>) {
          return Json{{"nu", d.nu}, {"set", set_json(d.set)}};
        } else if constexpr (std::is_same_v<T, OrbitBumpedData>) {
          return Json{{"base", config_json(sys, *d.base)},
                      {"theta", d.theta},
                      {"start", d.start}};
        } else {
          Json classes = Json::array();
          for (const auto& cls : d.classes) {
            const char* kind =
                cls.kind == PeriodicClassData::Kind::Cycle      ? "cycle"
                : cls.kind == PeriodicClassData::Kind::OneSided ? "one_sided"
                                                                : "bi_infinite";
            std::vector<int> base;
            for (Elem e : cls.base) base.push_back(e.v);
            classes.push_back(
                Json{{"kind", kind}, {"root", cls.root}, {"base", base}});
          }
          return Json{{"classes", classes}};
        }
      },
      c.data());
}

Cylinder parse_cylinder(const System& sys, const Json& j,
                        const std::string& path) {
  Cylinder c;
  c.constraints =
      pair_list(member(j, "constraints", path), path + ".constraints");
  std::vector<Index> seen;
  for (auto [a, e] : c.constraints) {
    if (!sys.contains(a))
      throw ParseError(path, "cylinder index outside the index set");
    if (e.v < 0 || e.v >= sys.ring().cardinality())
      throw ParseError(path, "cylinder value outside the ring");
    if (std::find(seen.begin(), seen.end(), a) != seen.end())
      throw ParseError(path, "cylinder constrains an index twice");
    seen.push_back(a);
  }
  return c;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["status"] = v.status == Status::Yes  ? "yes"
                : v.status == Status::No ? "no"
                                         : "unknown_by_paper";
  j["justification"] = v.justification;
  Json w = Json::object();
  if (v.witness_index) w["theta"] = *v.witness_index;
  if (v.collision) w["collision"] = Json::array({v.collision->first, v.collision->second});
  if (v.nonunit_weight_index) w["nonunit_weight_index"] = *v.nonunit_weight_index;
  if (v.periodic_point_index) w["periodic_point"] = *v.periodic_point_index;
  j["witness"] = w.empty() ? Json() : w;
  return j;
}

Json report_json(const ChaosReport& r) {
  return Json{{"sensitive", verdict_json(r.sensitive)},
              {"strongly_sensitive", verdict_json(r.strongly_sensitive)},
              {"li_yorke", verdict_json(r.li_yorke)},
              {"onto", verdict_json(r.onto)},
              {"dense_periodic", verdict_json(r.dense_periodic)},
              {"transitive", verdict_json(r.transitive)},
              {"devaney", verdict_json(r.devaney)}};
}

Json sweep_report_json(int n, const RingSpec& ring, const SweepReport& r) {
  return Json{{"size", n},
              {"ring", ring_spec_json(ring)},
              {"systems", r.systems},
              {"onto_count", r.onto_count},
              {"violations", r.violations}};
}

std::string simulate_csv(const System& sys, const Config& x, long long steps,
                         Index wlo, Index whi) {
  std::string out = "n";
  for (Index a = wlo; a < whi; ++a)
    out += ",c" + std::to_string(a - wlo);
  out += "\n";
  for (long long t = 0; t <= steps; ++t) {
    out += std::to_string(t);
    for (Index a = wlo; a < whi; ++a)
      out += "," + std::to_string(iterate_coord(sys, x, t, a).v);
    out += "\n";
  }
  return out;
}

}  // namespace wgs
