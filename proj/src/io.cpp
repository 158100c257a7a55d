#include "lpalab/io.hpp"

#include <fstream>
#include <sstream>

namespace lpa {

namespace {

int resolve_vertex(const Json& ref, int n, const std::vector<std::string>& names) {
  if (ref.is_number_integer()) {
    int v = ref.get<int>();
    if (v < 0 || v >= n) raise(Errc::BadGraphFile, "vertex index out of range");
    return v;
  }
  if (ref.is_string()) {
    const std::string s = ref.get<std::string>();
    for (int i = 0; i < n; ++i)
      if (names[i] == s) return i;
    raise(Errc::BadGraphFile, "unknown vertex name '" + s + "'");
  }
  raise(Errc::BadGraphFile, "vertex reference must be an index or a name");
}

}  // namespace

MultiGraph graph_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("vertices")) raise(Errc::BadGraphFile, "missing 'vertices'");
    int n = 0;
    std::vector<std::string> names;
    if (j["vertices"].is_number_integer()) {
      n = j["vertices"].get<int>();
      if (n < 1) raise(Errc::BadGraphFile, "vertex count must be >= 1");
      for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    } else if (j["vertices"].is_array()) {
      for (const auto& v : j["vertices"]) {
        if (!v.is_string()) raise(Errc::BadGraphFile, "vertex names must be strings");
        names.push_back(v.get<std::string>());
      }
      n = static_cast<int>(names.size());
      if (n < 1) raise(Errc::BadGraphFile, "vertex count must be >= 1");
    } else {
      raise(Errc::BadGraphFile, "'vertices' must be a count or a list of names");
    }
    std::vector<EdgeSpec> edges;
    if (j.contains("edges")) {
      if (!j["edges"].is_array()) raise(Errc::BadGraphFile, "'edges' must be an array");
      for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("from") || !e.contains("to"))
          raise(Errc::BadGraphFile, "edge needs 'from' and 'to'");
        int64_t count = e.value("count", int64_t{1});
        if (count < 1) raise(Errc::BadGraphFile, "edge count must be >= 1");
        edges.push_back(EdgeSpec{resolve_vertex(e["from"], n, names), resolve_vertex(e["to"], n, names), count});
      }
    }
    return MultiGraph::build(n, edges, std::move(names));
  } catch (const Json::exception& ex) {
    raise(Errc::BadGraphFile, ex.what());
  }
}

Json graph_to_json(const MultiGraph& g) {
  Json j;
  if (g.has_default_labels())
    j["vertices"] = g.vertex_count();
  else
    j["vertices"] = g.labels();
  Json edges = Json::array();
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int k = 0; k < g.vertex_count(); ++k) {
      if (g.adjacency(i, k) == 0) continue;
      Json e;
      if (g.has_default_labels()) {
        e["from"] = i;
        e["to"] = k;
      } else {
        e["from"] = g.labels()[i];
        e["to"] = g.labels()[k];
      }
      e["count"] = g.adjacency(i, k);
      edges.push_back(std::move(e));
    }
  j["edges"] = std::move(edges);
  return j;
}

MultiGraph graph_from_compact(const std::string& text) {
  // "l1,t1;l2,t2"
  int64_t v[4];
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t used = 0;
    try {
      v[i] = std::stoll(text.substr(pos), &used);
    } catch (const std::exception&) {
      raise(Errc::BadGraphFile, "bad compact signature '" + text + "'");
    }
    pos += used;
    if (i < 3) {
      const char sep = i == 1 ? ';' : ',';
      if (pos >= text.size() || text[pos] != sep)
        raise(Errc::BadGraphFile, "bad compact signature '" + text + "'");
      ++pos;
    }
  }
  if (pos != text.size()) raise(Errc::BadGraphFile, "trailing characters in signature '" + text + "'");
  if (v[0] < 0 || v[1] < 0 || v[2] < 0 || v[3] < 0)
    raise(Errc::BadGraphFile, "signature entries must be >= 0");
  return TwoVertexSignature({v[0], v[1]}, {v[2], v[3]}).to_graph();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::BadGraphFile, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MultiGraph load_graph(const std::string& path_or_sig) {
  if (path_or_sig.rfind("sig:", 0) == 0) return graph_from_compact(path_or_sig.substr(4));
  std::string text = read_file(path_or_sig);
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::BadGraphFile, "malformed JSON in '" + path_or_sig + "'");
  return graph_from_json(j);
}

IntMatrix matrix_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
      raise(Errc::BadGraphFile, "matrix JSON needs a non-empty 'rows' array");
    std::vector<std::vector<int64_t>> rows;
    for (const auto& r : j["rows"]) rows.push_back(r.get<std::vector<int64_t>>());
    return IntMatrix::from_rows(rows);
  } catch (const Json::exception& ex) {
    raise(Errc::BadGraphFile, ex.what());
  }
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
    rows.push_back(std::move(r));
  }
  Json j;
  j["rows"] = std::move(rows);
  return j;
}

IntMatrix load_matrix(const std::string& path) {
  Json j = Json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) raise(Errc::BadGraphFile, "malformed JSON in '" + path + "'");
  return matrix_from_json(j);
}

Json group_to_json(const FgAbelianGroup& g) {
  Json j;
  j["torsion"] = g.torsion;
  j["rank"] = g.free_rank;
  return j;
}

Json element_to_json(const GroupElement& e) {
  Json j;
  j["torsion"] = e.torsion_coords;
  j["free"] = e.free_coords;
  return j;
}

Json descriptor_to_json(const AlgebraDescriptor& d) {
  using K = AlgebraDescriptor::Kind;
  Json j;
  switch (d.kind()) {
    case K::Zero: j["kind"] = "zero"; break;
    case K::Field: j["kind"] = "field"; break;
    case K::Laurent: j["kind"] = "laurent"; break;
    case K::Leavitt:
      j["kind"] = "leavitt";
      j["n"] = d.param();
      break;
    case K::Mat:
      j["kind"] = "mat";
      j["size"] = d.param();
      j["arg"] = descriptor_to_json(d.children()[0]);
      break;
    case K::MatInf:
      j["kind"] = "matinf";
      j["arg"] = descriptor_to_json(d.children()[0]);
      break;
    case K::Product: {
      j["kind"] = "product";
      Json f = Json::array();
      for (const auto& c : d.children()) f.push_back(descriptor_to_json(c));
      j["factors"] = std::move(f);
      break;
    }
    case K::Full: j["kind"] = "full"; break;
  }
  return j;
}

namespace {

Json vertex_set_to_json(const VertexSet& s) {
  Json a = Json::array();
  for (int v : s) a.push_back(v);
  return a;
}

std::string vertex_set_str(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

Json bundle_to_json(const InvariantBundle& b) {
  Json j;
  if (b.type.ibn) {
    j["type"] = Json{{"ibn", true}};
  } else {
    j["type"] = Json{{"ibn", false}, {"n", *b.type.type_n}};
  }
  Json k0;
  k0["torsion"] = b.k0.group.torsion;
  k0["rank"] = b.k0.group.free_rank;
  k0["unit"] = element_to_json(b.k0.order_unit);
  if (b.k0.unit_order)
    k0["unit_order"] = *b.k0.unit_order;
  else
    k0["unit_order"] = "infinite";
  j["k0"] = std::move(k0);
  j["d_E"] = b.k0.d_e;
  j["delta_E"] = b.k0.delta_e;
  j["flags"] = Json{{"soc_nonzero", b.flags.soc_nonzero},
                    {"decomposable", b.flags.decomposable},
                    {"simple", b.flags.simple},
                    {"pis", b.flags.pis},
                    {"condition_L", b.flags.condition_l}};
  j["sets"] = Json{{"P_l", vertex_set_to_json(b.p_l)},
                   {"P_c", vertex_set_to_json(b.p_c)},
                   {"P_ec", vertex_set_to_json(b.p_ec)}};
  if (b.descriptors) {
    j["descriptors"] = Json{{"ideal_pl", descriptor_to_json(b.descriptors->ideal_pl)},
                            {"ideal_pc", descriptor_to_json(b.descriptors->ideal_pc)},
                            {"ideal_pec", descriptor_to_json(b.descriptors->ideal_pec)},
                            {"quotient", descriptor_to_json(b.descriptors->quotient)}};
  }
  return j;
}

Json classify_to_json(const ClassifyResult& c) {
  Json j;
  j["label"] = c.label.str();
  j["decision_path"] = c.decision_path;
  j["invariants"] = bundle_to_json(c.bundle);
  return j;
}

Json witness_path_to_json(const WitnessPath& w) {
  Json j;
  j["start"] = graph_to_json(w.start);
  j["end"] = graph_to_json(w.end);
  j["meet"] = graph_to_json(w.meet);
  Json steps = Json::array();
  for (const auto& s : w.steps) {
    steps.push_back(Json{{"side", s.from_left ? "left" : "right"},
                         {"from", s.spec.source},
                         {"to", s.spec.range}});
  }
  j["steps"] = std::move(steps);
  return j;
}

Json decision_to_json(const IsoDecision& d) {
  Json j;
  switch (d.verdict) {
    case IsoDecision::Verdict::Isomorphic: j["verdict"] = "isomorphic"; break;
    case IsoDecision::Verdict::NotIsomorphic: j["verdict"] = "not_isomorphic"; break;
    case IsoDecision::Verdict::Unknown: j["verdict"] = "unknown"; break;
  }
  j["summary"] = d.summary;
  if (d.witness) {
    Json w;
    switch (d.witness->kind) {
      case IsoWitness::Kind::EqualCanonical: w["kind"] = "equal-canonical"; break;
      case IsoWitness::Kind::TheoremClause: w["kind"] = "theorem"; break;
      case IsoWitness::Kind::ShiftPath: w["kind"] = "shift-path"; break;
    }
    if (!d.witness->clause.empty()) w["clause"] = d.witness->clause;
    if (d.witness->path) w["path"] = witness_path_to_json(*d.witness->path);
    j["witness"] = std::move(w);
  }
  if (d.diff) {
    j["invariant"] = Json{{"name", d.diff->name}, {"left", d.diff->left}, {"right", d.diff->right}};
  }
  if (!d.unknown_tag.empty()) j["tag"] = d.unknown_tag;
  return j;
}

std::string bundle_to_text(const InvariantBundle& b) {
  std::ostringstream out;
  out << "type: " << b.type.str() << "\n";
  out << "K0: " << b.k0.group.str() << "\n";
  out << "order unit: ";
  {
    bool first = true;
    out << "[";
    for (int64_t c : b.k0.order_unit.torsion_coords) {
      if (!first) out << ",";
      out << c;
      first = false;
    }
    for (int64_t c : b.k0.order_unit.free_coords) {
      if (!first) out << ",";
      out << c;
      first = false;
    }
    out << "], order ";
    if (b.k0.unit_order)
      out << *b.k0.unit_order;
    else
      out << "infinite";
    out << "\n";
  }
  out << "d_E: " << b.k0.d_e << "\n";
  out << "delta_E: " << b.k0.delta_e << "\n";
  out << "flags: soc_nonzero=" << b.flags.soc_nonzero << " decomposable=" << b.flags.decomposable
      << " simple=" << b.flags.simple << " pis=" << b.flags.pis << " condition_L=" << b.flags.condition_l
      << "\n";
  out << "P_l: " << vertex_set_str(b.p_l) << "  P_c: " << vertex_set_str(b.p_c)
      << "  P_ec: " << vertex_set_str(b.p_ec) << "\n";
  if (b.descriptors) {
    out << "I(P_l): " << b.descriptors->ideal_pl.str() << "\n";
    out << "I(P_c): " << b.descriptors->ideal_pc.str() << "\n";
    out << "I(P_ec): " << b.descriptors->ideal_pec.str() << "\n";
    out << "quotient: " << b.descriptors->quotient.str() << "\n";
  }
  return out.str();
}

std::string classify_to_text(const ClassifyResult& c) {
  std::ostringstream out;
  out << "case: " << c.label.str() << "\n";
  out << "decision path: ";
  for (std::size_t i = 0; i < c.decision_path.size(); ++i) {
    if (i) out << " -> ";
    out << c.decision_path[i];
  }
  out << "\n" << bundle_to_text(c.bundle);
  return out.str();
}

std::string decision_to_text(const IsoDecision& d) {
  std::ostringstream out;
  out << d.summary << "\n";
  if (d.diff)
    out << "invariant: " << d.diff->name << " (" << d.diff->left << " vs " << d.diff->right << ")\n";
  if (!d.unknown_tag.empty()) out << "tag: " << d.unknown_tag << "\n";
  if (d.witness && d.witness->path) {
    out << "witness steps:";
    for (const auto& s : d.witness->path->steps)
      out << " " << (s.from_left ? "L" : "R") << "(" << s.spec.source << "->" << s.spec.range << ")";
    out << "\n";
  }
  return out.str();
}

namespace {

std::string row_signature(const TableRow& r) {
  if (r.signature) return r.signature->str();
  return "loops=" + std::to_string(r.one_vertex_loops);
}

}  // namespace

Json table_row_to_json(const TableRow& r) {
  Json j;
  j["signature"] = row_signature(r);
  j["label"] = r.label.str();
  j["invariants"] = bundle_to_json(r.bundle);
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "signature,label,ibn,type,k0,unit_order,d_E,delta_E,P_l,P_c,dec,pis,betti,"
         "ideal_pl,ideal_pc,ideal_pec,quotient\n";
  for (const auto& r : rows) {
    const auto& b = r.bundle;
    std::vector<std::string> fields{
        row_signature(r),
        r.label.str(),
        b.type.ibn ? "1" : "0",
        b.type.ibn ? "-" : std::to_string(*b.type.type_n),
        b.k0.group.str(),
        b.k0.unit_order ? std::to_string(*b.k0.unit_order) : "inf",
        std::to_string(b.k0.d_e),
        std::to_string(b.k0.delta_e),
        b.p_l.empty() ? "0" : "1",
        b.p_c.empty() ? "0" : "1",
        b.flags.decomposable ? "1" : "0",
        b.flags.pis ? "1" : "0",
        std::to_string(b.k0.group.free_rank),
    };
    if (b.descriptors) {
      fields.push_back(b.descriptors->ideal_pl.str());
      fields.push_back(b.descriptors->ideal_pc.str());
      fields.push_back(b.descriptors->ideal_pec.str());
      fields.push_back(b.descriptors->quotient.str());
    } else {
      fields.insert(fields.end(), {"-", "-", "-", "-"});
    }
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << "\n";
  }
  return out.str();
}

std::string table_to_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    const auto& b = r.bundle;
    out << row_signature(r) << "  case " << r.label.str() << "  type " << b.type.str() << "  K0 "
        << b.k0.group.str() << "  d=" << b.k0.d_e << " delta=" << b.k0.delta_e << "\n";
  }
  return out.str();
}

std::string digest(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hex[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace lpa
