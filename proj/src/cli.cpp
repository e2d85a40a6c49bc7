#include "fwb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include "fwb/errors.hpp"
#include "fwb/group_spec.hpp"

namespace fwb::cli {

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string members_text(const Subgroup& h) {
  std::string out;
  for (Element e : h.elements()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

Json members_json(const Subgroup& h) {
  Json arr = Json::array();
  for (Element e : h.elements()) arr.push_back(e);
  return arr;
}

std::string element_text(const BurnsideElement& x) {
  std::string out;
  const auto& ring = *x.ring();
  for (std::size_t c = 0; c < ring.rank(); ++c) {
    const Rational& q = x.coefficient(ClassId{c});
    if (q == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(q) + "*[" + ring.label(ClassId{c}) + "]";
  }
  return out.empty() ? "0" : out;
}

Output element_output(const BurnsideElement& x, Json header) {
  Output out;
  header["element"] = element_to_json(x);
  out.json = std::move(header);
  out.table.header = {"class", "order", "coefficient"};
  const auto& ring = *x.ring();
  for (std::size_t c = 0; c < ring.rank(); ++c) {
    const Rational& q = x.coefficient(ClassId{c});
    if (q == 0) continue;
    out.table.rows.push_back(
        {ring.label(ClassId{c}), std::to_string(ring.lattice().class_order(ClassId{c})), to_string(q)});
  }
  return out;
}

struct Sub {
  Homomorphism embedding;
  RingPtr ring;
};

Sub subgroup_ring(const Subgroup& h, std::size_t cap) {
  Homomorphism emb = subgroup_embedding(h);
  RingPtr ring = BurnsideRing::make(emb.source, cap);
  return Sub{std::move(emb), std::move(ring)};
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  throw ParseError("unknown format '" + std::string(name) + "' (expected json, csv or table)");
}

std::string to_csv(const Table& table) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += field(cells[i]);
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string to_text(const Table& table) {
  std::vector<std::size_t> width(table.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(table.header);
  for (const auto& row : table.rows) measure(row);
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string l;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) l += "  ";
      l += cells[i];
      if (i + 1 < cells.size() && i < width.size()) l.append(width[i] - cells[i].size(), ' ');
    }
    out += l + '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string render(const Output& out, Format format) {
  switch (format) {
    case Format::Json: return out.json.dump(2) + "\n";
    case Format::Csv: return to_csv(out.table);
    case Format::Table: return to_text(out.table);
  }
  return {};
}

// ---------------------------------------------------------------------------

Json element_to_json(const BurnsideElement& x) {
  Json arr = Json::array();
  const auto& ring = *x.ring();
  for (std::size_t c = 0; c < ring.rank(); ++c) {
    const Rational& q = x.coefficient(ClassId{c});
    if (q != 0) arr.push_back(Json::array({ring.label(ClassId{c}), to_string(q)}));
  }
  return arr;
}

BurnsideElement element_from_json(const Json& j, const RingPtr& ring) {
  if (!j.is_array()) throw ParseError("element must be a JSON array of [label, coefficient] pairs");
  std::vector<Rational> coeffs(ring->rank());
  std::vector<char> seen(ring->rank(), 0);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& pair = j[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string())
      throw ParseError("element entry " + std::to_string(i) + " is not a [label, coefficient] pair");
    const ClassId c = ring->lattice().class_from_label(pair[0].get<std::string>());
    if (seen[c.value]) throw ParseError("class " + pair[0].get<std::string>() + " listed twice");
    seen[c.value] = 1;
    if (pair[1].is_string())
      coeffs[c.value] = parse_rational(pair[1].get<std::string>());
    else if (pair[1].is_number_integer())
      coeffs[c.value] = parse_rational(std::to_string(pair[1].get<long long>()));
    else
      throw ParseError("coefficient of entry " + std::to_string(i) + " must be a \"p/q\" string");
  }
  return BurnsideElement(ring, std::move(coeffs));
}

BurnsideElement read_element(const std::string& text_or_path, const RingPtr& ring) {
  std::string text = trim(text_or_path);
  if (text.empty() || text.front() != '[') {
    std::ifstream in(text_or_path);
    if (!in) throw ParseError("cannot read element file '" + text_or_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid element JSON: ") + e.what(), e.byte);
  }
  return element_from_json(j, ring);
}

// ---------------------------------------------------------------------------

SubgroupId select_subgroup(const SubgroupLattice& lattice, std::string_view selector) {
  const std::string s = trim(selector);
  if (s == "center") return lattice.id_of(center(lattice.group_ptr()));
  if (s == "frattini") return frattini(lattice);
  if (s == "maxcyc") return max_cyclic_intersection(lattice);
  if (s == "whole") return lattice.whole();
  if (s == "trivial") return lattice.trivial();
  if (s.rfind("order=", 0) == 0) return lattice.representative(lattice.class_from_label(s));
  throw ParseError("unknown subgroup selector '" + s + "' (expected center, frattini, maxcyc, whole, trivial or order=<k>:<i>)");
}

// ---------------------------------------------------------------------------

Output group_command(const std::string& spec, std::size_t cap) {
  const GroupPtr g = construct_group(spec, cap);
  const Subgroup z = center(g);
  std::vector<std::size_t> orders(g->order());
  for (Element a = 0; a < g->order(); ++a) orders[a] = g->element_order(a);

  Output out;
  out.json = {{"group", g->label()},
              {"order", g->order()},
              {"identity", g->identity()},
              {"abelian", g->is_abelian()},
              {"center_order", z.order()},
              {"element_orders", orders}};
  out.table.header = {"element", "order"};
  for (Element a = 0; a < g->order(); ++a) out.table.rows.push_back({std::to_string(a), std::to_string(orders[a])});
  return out;
}

Output lattice_command(const std::string& spec, std::size_t cap) {
  const LatticePtr lat = enumerate_subgroups(construct_group(spec, cap), cap);
  const SubgroupLattice& l = *lat;
  const std::size_t n = l.group().order();
  const SubgroupId phi = frattini(l);
  const SubgroupId maxcyc = max_cyclic_intersection(l);

  Output out;
  Json classes = Json::array();
  out.table.header = {"class", "order", "class_size", "normalizer_index", "normal", "cyclic", "representative"};
  for (std::size_t c = 0; c < l.class_count(); ++c) {
    const ClassId cid{c};
    const SubgroupId rep = l.representative(cid);
    const std::size_t nindex = n / l.order(l.normalizer(rep));
    classes.push_back({{"label", l.class_label(cid)},
                       {"order", l.order(rep)},
                       {"class_size", l.class_members(cid).size()},
                       {"normalizer_index", nindex},
                       {"normal", l.is_normal(rep)},
                       {"cyclic", l.is_cyclic(rep)},
                       {"representative", members_json(l.subgroup(rep))}});
    out.table.rows.push_back({l.class_label(cid), std::to_string(l.order(rep)),
                              std::to_string(l.class_members(cid).size()), std::to_string(nindex),
                              bool_text(l.is_normal(rep)), bool_text(l.is_cyclic(rep)),
                              members_text(l.subgroup(rep))});
  }
  out.json = {{"group", l.group().label()},
              {"order", n},
              {"subgroup_count", l.size()},
              {"class_count", l.class_count()},
              {"classes", std::move(classes)},
              {"frattini",
               {{"class", l.class_label(l.class_of(phi))}, {"order", l.order(phi)}, {"members", members_json(l.subgroup(phi))}}},
              {"max_cyclic_intersection",
               {{"class", l.class_label(l.class_of(maxcyc))},
                {"order", l.order(maxcyc)},
                {"members", members_json(l.subgroup(maxcyc))}}}};
  return out;
}

Output marks_command(const std::string& spec, std::size_t cap) {
  const RingPtr ring = BurnsideRing::make(construct_group(spec, cap), cap);
  Output out;
  Json labels = Json::array();
  Json rows = Json::array();
  out.table.header = {"class"};
  for (std::size_t c = 0; c < ring->rank(); ++c) {
    labels.push_back(ring->label(ClassId{c}));
    out.table.header.push_back(ring->label(ClassId{c}));
  }
  for (std::size_t h = 0; h < ring->rank(); ++h) {
    Json row = Json::array();
    std::vector<std::string> cells{ring->label(ClassId{h})};
    for (std::size_t k = 0; k < ring->rank(); ++k) {
      const long long m = ring->mark(ClassId{h}, ClassId{k});
      row.push_back(m);
      cells.push_back(std::to_string(m));
    }
    rows.push_back(std::move(row));
    out.table.rows.push_back(std::move(cells));
  }
  out.json = {{"group", ring->group().label()}, {"classes", std::move(labels)}, {"marks", std::move(rows)}};
  return out;
}

Output idempotents_command(const std::string& spec, std::size_t cap) {
  const RingPtr ring = BurnsideRing::make(construct_group(spec, cap), cap);
  Output out;
  Json list = Json::array();
  out.table.header = {"class", "idempotent"};
  for (std::size_t c = 0; c < ring->rank(); ++c) {
    const BurnsideElement e = ring->idempotent(ClassId{c});
    list.push_back({{"class", ring->label(ClassId{c})}, {"element", element_to_json(e)}});
    out.table.rows.push_back({ring->label(ClassId{c}), element_text(e)});
  }
  out.json = {{"group", ring->group().label()}, {"idempotents", std::move(list)}};
  return out;
}

Output mconst_command(const std::string& spec, const std::string& l_selector, const std::string& k_selector,
                      std::size_t cap) {
  const LatticePtr lat = enumerate_subgroups(construct_group(spec, cap), cap);
  const SubgroupId l = select_subgroup(*lat, l_selector);
  const Homomorphism emb = subgroup_embedding(lat->subgroup(l));
  const LatticePtr inner = enumerate_subgroups(emb.source, cap);
  const SubgroupId k = select_subgroup(*inner, k_selector);
  const Rational m = m_constant(*inner, inner->whole(), k);

  Output out;
  out.json = {{"group", lat->group().label()},
              {"L", {{"selector", l_selector}, {"class", lat->class_label(lat->class_of(l))}, {"order", lat->order(l)}}},
              {"K", {{"selector", k_selector}, {"order", inner->order(k)}, {"members", members_json(emb.image(inner->subgroup(k)))}}},
              {"m", to_string(m)}};
  out.table.header = {"L", "L_order", "K", "K_order", "m"};
  out.table.rows.push_back({l_selector, std::to_string(lat->order(l)), k_selector, std::to_string(inner->order(k)),
                            to_string(m)});
  return out;
}

Output op_command(BisetOp op, const std::string& spec, const std::string& selector, const std::string& element,
                  std::size_t cap) {
  const RingPtr ring = BurnsideRing::make(construct_group(spec, cap), cap);
  const SubgroupLattice& lat = ring->lattice();
  const SubgroupId sub = select_subgroup(lat, selector);
  const Subgroup& s = lat.subgroup(sub);

  Json header = {{"op", to_string(op)},
                 {"group", ring->group().label()},
                 {"subgroup", {{"selector", selector}, {"order", s.order()}}}};
  std::optional<BurnsideElement> result;
  switch (op) {
    case BisetOp::Restriction: {
      const Sub h = subgroup_ring(s, cap);
      result = restrict(read_element(element, ring), h.embedding, h.ring);
      break;
    }
    case BisetOp::Induction: {
      const Sub h = subgroup_ring(s, cap);
      result = induce(read_element(element, h.ring), h.embedding, ring);
      break;
    }
    case BisetOp::TensorInduction: {
      const Sub h = subgroup_ring(s, cap);
      result = tensor_induce(read_element(element, h.ring), h.embedding, ring);
      break;
    }
    case BisetOp::Inflation:
    case BisetOp::Deflation:
    case BisetOp::FixedPoints: {
      const QuotientMap q = quotient_group(s);
      const RingPtr qring = BurnsideRing::make(q.target(), cap);
      if (op == BisetOp::Inflation)
        result = inflate(read_element(element, qring), q, ring);
      else if (op == BisetOp::Deflation)
        result = deflate(read_element(element, ring), q, qring);
      else
        result = fixed_points(read_element(element, ring), q, qring);
      break;
    }
  }
  header["result_group"] = result->ring()->group().label();
  return element_output(*result, std::move(header));
}

Output fw_apply_command(const std::string& spec, const std::string& element, std::size_t cap) {
  const FwContextPtr ctx = FwContext::make(construct_group(spec, cap), cap);
  const BurnsideElement x = read_element(element, ctx->cyclic_ring());
  Json header = {{"group", ctx->group().label()}, {"cyclic_group", ctx->cyclic_ptr()->label()}};
  return element_output(fw_apply(*ctx, x), std::move(header));
}

Output fw_check_command(BisetOp op, const std::string& spec, const std::string& selector, std::size_t cap) {
  const FwContextPtr ctx = FwContext::make(construct_group(spec, cap), cap);
  const SubgroupId sub = select_subgroup(ctx->lattice(), selector);
  const CommutativityReport report = check_commutes(*ctx, op, sub);

  Output out;
  out.json = {{"group", ctx->group().label()},
              {"op", to_string(op)},
              {"subgroup", {{"selector", selector}, {"order", ctx->lattice().order(sub)}}},
              {"commutes", report.commutes},
              {"basis_size", report.basis_size}};
  out.table.header = {"group", "op", "subgroup", "commutes", "basis_size", "failing_basis", "lhs", "rhs"};
  std::vector<std::string> row{ctx->group().label(), to_string(op), selector, bool_text(report.commutes),
                               std::to_string(report.basis_size), "", "", ""};
  if (report.certificate) {
    const auto& cert = *report.certificate;
    out.json["certificate"] = {{"basis", cert.basis_label},
                               {"lhs", element_to_json(cert.lhs)},
                               {"rhs", element_to_json(cert.rhs)}};
    row[5] = cert.basis_label;
    row[6] = element_text(cert.lhs);
    row[7] = element_text(cert.rhs);
  }
  out.table.rows.push_back(std::move(row));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<BisetOp> parse_survey_ops(std::string_view list) {
  const std::string s = trim(list);
  if (s.empty() || s == "all") return {std::begin(kSurveyOps), std::end(kSurveyOps)};
  std::vector<BisetOp> ops;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const BisetOp op = parse_biset_op(trim(item));
    if (std::find(std::begin(kSurveyOps), std::end(kSurveyOps), op) == std::end(kSurveyOps))
      throw ParseError("operation '" + to_string(op) + "' is not part of the survey (use inf, ind, ten, def)");
    if (std::find(ops.begin(), ops.end(), op) == ops.end()) ops.push_back(op);
  }
  return ops;
}

std::vector<std::string> read_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read catalog '" + path + "'");
  std::vector<std::string> specs;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string spec = trim(line);
    if (!spec.empty()) specs.push_back(std::move(spec));
  }
  return specs;
}

namespace {

std::vector<SurveyRow> survey_group(const std::string& spec, const std::vector<BisetOp>& ops, std::size_t cap) {
  std::vector<SurveyRow> rows;
  FwContextPtr ctx;
  try {
    ctx = FwContext::make(construct_group(spec, cap), cap);
  } catch (const std::exception& e) {
    SurveyRow row;
    row.group = spec;
    row.error = e.what();
    rows.push_back(std::move(row));
    return rows;
  }
  const SubgroupLattice& lat = ctx->lattice();
  const SubgroupId z = lat.id_of(center(ctx->group_ptr()));
  for (std::size_t s = 0; s < lat.size(); ++s) {
    const SubgroupId n{s};
    if (!lat.is_normal(n)) continue;
    SurveyRow row;
    row.group = spec;
    row.order = lat.group().order();
    row.n_selector = lat.class_label(lat.class_of(n));
    row.n_order = lat.order(n);
    try {
      row.gcd = check_gcd_property(lat, n);
      row.cyclic = lat.is_cyclic(n);
      row.central = lat.contains(z, n);
      row.m_equal = check_m_equality(*ctx, n).holds;
      for (std::size_t i = 0; i < std::size(kSurveyOps); ++i)
        if (std::find(ops.begin(), ops.end(), kSurveyOps[i]) != ops.end())
          row.commutes[i] = bool_text(check_commutes(*ctx, kSurveyOps[i], n).commutes);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<SurveyRow> run_survey(const std::vector<std::string>& catalog, const std::vector<BisetOp>& ops,
                                  std::size_t cap, std::size_t threads) {
  std::vector<std::vector<SurveyRow>> per_group(catalog.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < catalog.size(); ++i) per_group[i] = survey_group(catalog[i], ops, cap);
  } else {
    for (std::size_t start = 0; start < catalog.size(); start += threads) {
      const std::size_t stop = std::min(catalog.size(), start + threads);
      std::vector<std::future<std::vector<SurveyRow>>> jobs;
      for (std::size_t i = start; i < stop; ++i)
        jobs.push_back(std::async(std::launch::async, survey_group, std::cref(catalog[i]), std::cref(ops), cap));
      for (std::size_t i = start; i < stop; ++i) per_group[i] = jobs[i - start].get();
    }
  }
  std::vector<SurveyRow> rows;
  for (auto& group_rows : per_group)
    for (auto& row : group_rows) rows.push_back(std::move(row));
  return rows;
}

Table survey_table(const std::vector<SurveyRow>& rows) {
  Table t;
  t.header = {"group", "order", "N", "N_order", "gcd", "cyclic", "central", "m_equal"};
  for (BisetOp op : kSurveyOps) t.header.push_back("commutes_" + to_string(op));
  t.header.push_back("error");
  for (const SurveyRow& r : rows) {
    std::vector<std::string> cells;
    if (r.order == 0) {
      cells = {r.group, "", "", "", "", "", "", ""};
      for (std::size_t i = 0; i < std::size(kSurveyOps); ++i) cells.push_back("");
    } else {
      cells = {r.group, std::to_string(r.order), r.n_selector, std::to_string(r.n_order), bool_text(r.gcd),
               bool_text(r.cyclic), bool_text(r.central), bool_text(r.m_equal)};
      for (const auto& c : r.commutes) cells.push_back(c);
    }
    cells.push_back(r.error);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

}  // namespace fwb::cli
