#include "collabnet/network_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <json.hpp>

#include "collabnet/error.hpp"
#include "collabnet/subjects.hpp"
#include "csv.hpp"

namespace collabnet {

namespace {

Weight parse_weight(const std::string& text, std::size_t line) {
  Weight value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw Error(ErrorCode::MalformedRow, "weight `" + text +
                                             "` is not a positive integer "
                                             "on line " +
                                             std::to_string(line));
  }
  return value;
}

Category parse_category_or_throw(const std::string& token, std::size_t line) {
  auto c = parse_category(token);
  if (!c) {
    throw Error(ErrorCode::UnknownCategory,
                "`" + token + "` on line " + std::to_string(line));
  }
  return *c;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return in;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string hex_color(Rgb c) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "#";
  for (std::uint8_t v : {c.r, c.g, c.b}) {
    out += kDigits[v >> 4];
    out += kDigits[v & 0xF];
  }
  return out;
}

}  // namespace

void write_edge_csv(std::ostream& out, const CollabNetwork& network) {
  out << "institution_a,institution_b,weight\n";
  for (const EdgeRecord& e : network.edge_records()) {
    detail::write_csv_row(out, {e.a, e.b, std::to_string(e.data.weight)});
  }
}

void write_node_csv(std::ostream& out, const CollabNetwork& network) {
  out << "institution_id,name,category\n";
  for (const Institution& n : network.nodes()) {
    detail::write_csv_row(out, {n.id, n.name, std::string(to_token(n.category))});
  }
}

void write_subject_csv(std::ostream& out, const CollabNetwork& network) {
  out << "institution_a,institution_b,subject,count\n";
  for (const EdgeRecord& e : network.edge_records()) {
    for (const auto& [subject, count] : e.data.subjects) {
      detail::write_csv_row(out, {e.a, e.b, subject, std::to_string(count)});
    }
  }
}

CollabNetwork read_network_csv(std::istream& edges_in, std::istream& nodes_in,
                               std::istream* subjects_in) {
  const auto node_rows = detail::read_csv(nodes_in);
  detail::expect_header(node_rows, {"institution_id", "name", "category"},
                        "node file");
  std::vector<Institution> nodes;
  for (std::size_t i = 1; i < node_rows.size(); ++i) {
    const auto& row = node_rows[i];
    if (row.fields.size() != 3 || row.fields[0].empty()) {
      throw Error(ErrorCode::MalformedRow,
                  "node file line " + std::to_string(row.line));
    }
    nodes.push_back({row.fields[0], row.fields[1],
                     parse_category_or_throw(row.fields[2], row.line)});
  }

  const auto edge_rows = detail::read_csv(edges_in);
  detail::expect_header(edge_rows, {"institution_a", "institution_b", "weight"},
                        "edge file");
  std::map<std::pair<std::string, std::string>, EdgeData> edges;
  for (std::size_t i = 1; i < edge_rows.size(); ++i) {
    const auto& row = edge_rows[i];
    if (row.fields.size() != 3) {
      throw Error(ErrorCode::MalformedRow,
                  "edge file line " + std::to_string(row.line));
    }
    auto key = std::minmax(row.fields[0], row.fields[1]);
    EdgeData data{parse_weight(row.fields[2], row.line), {}};
    if (!edges.emplace(std::pair(key.first, key.second), std::move(data))
             .second) {
      throw Error(ErrorCode::MalformedRow,
                  "duplicate edge on line " + std::to_string(row.line));
    }
  }

  if (subjects_in) {
    const auto rows = detail::read_csv(*subjects_in);
    detail::expect_header(
        rows, {"institution_a", "institution_b", "subject", "count"},
        "subject file");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (row.fields.size() != 4) {
        throw Error(ErrorCode::MalformedRow,
                    "subject file line " + std::to_string(row.line));
      }
      auto key = std::minmax(row.fields[0], row.fields[1]);
      auto it = edges.find(std::pair(key.first, key.second));
      if (it == edges.end()) {
        throw Error(ErrorCode::MalformedRow,
                    "subject row for a missing edge on line " +
                        std::to_string(row.line));
      }
      auto subject = canonical_subject(row.fields[2]);
      if (!subject) {
        throw Error(ErrorCode::UnknownSubject,
                    "`" + row.fields[2] + "` on line " +
                        std::to_string(row.line));
      }
      it->second.subjects[*subject] += parse_weight(row.fields[3], row.line);
    }
  }

  std::vector<EdgeRecord> records;
  records.reserve(edges.size());
  for (auto& [key, data] : edges) {
    records.push_back({key.first, key.second, std::move(data)});
  }
  return CollabNetwork(std::move(nodes), std::move(records),
                       subjects_in != nullptr);
}

CollabNetwork load_network_csv(
    const std::filesystem::path& edges, const std::filesystem::path& nodes,
    const std::optional<std::filesystem::path>& subjects) {
  auto edges_in = open_in(edges);
  auto nodes_in = open_in(nodes);
  if (subjects) {
    auto subjects_in = open_in(*subjects);
    return read_network_csv(edges_in, nodes_in, &subjects_in);
  }
  return read_network_csv(edges_in, nodes_in);
}

void save_network_csv(const CollabNetwork& network,
                      const std::filesystem::path& edges,
                      const std::filesystem::path& nodes,
                      const std::optional<std::filesystem::path>& subjects) {
  auto edges_out = open_out(edges);
  write_edge_csv(edges_out, network);
  auto nodes_out = open_out(nodes);
  write_node_csv(nodes_out, network);
  if (subjects) {
    auto subjects_out = open_out(*subjects);
    write_subject_csv(subjects_out, network);
  }
}

// ---------------------------------------------------------------------------
// GEXF

void write_gexf(std::ostream& out, const CollabNetwork& network,
                const GexfOptions& options) {
  Weight max_wd = 0;
  for (NodeIndex i = 0; i < network.node_count(); ++i) {
    max_wd = std::max(max_wd, network.weighted_degree(i));
  }

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<gexf xmlns=\"http://gexf.net/1.3\" "
         "xmlns:viz=\"http://gexf.net/1.3/viz\" "
         "xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
         "xsi:schemaLocation=\"http://gexf.net/1.3 "
         "http://gexf.net/1.3/gexf.xsd\" version=\"1.3\">\n"
         "  <meta>\n    <creator>collabnet</creator>\n"
         "    <description>Institution collaboration network</description>\n"
         "  </meta>\n"
         "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n"
         "    <attributes class=\"node\" mode=\"static\">\n"
         "      <attribute id=\"category\" title=\"category\" "
         "type=\"string\"/>\n"
         "      <attribute id=\"weighted_degree\" title=\"weighted_degree\" "
         "type=\"long\"/>\n";
  if (options.center) {
    out << "      <attribute id=\"ego_center\" title=\"ego_center\" "
           "type=\"boolean\"/>\n";
  }
  out << "    </attributes>\n"
         "    <nodes count=\"" << network.node_count() << "\">\n";
  for (NodeIndex i = 0; i < network.node_count(); ++i) {
    const Institution& n = network.node(i);
    const Weight wd = network.weighted_degree(i);
    const double size =
        max_wd == 0 ? 0.0
                    : options.max_node_size * static_cast<double>(wd) /
                          static_cast<double>(max_wd);
    const Rgb color = category_color(n.category);
    out << "      <node id=\"" << xml_escape(n.id) << "\" label=\""
        << xml_escape(n.name) << "\">\n"
        << "        <attvalues>\n"
        << "          <attvalue for=\"category\" value=\""
        << to_token(n.category) << "\"/>\n"
        << "          <attvalue for=\"weighted_degree\" value=\"" << wd
        << "\"/>\n";
    if (options.center) {
      out << "          <attvalue for=\"ego_center\" value=\""
          << (n.id == *options.center ? "true" : "false") << "\"/>\n";
    }
    out << "        </attvalues>\n"
        << "        <viz:size value=\"" << detail::format_double(size)
        << "\"/>\n"
        << "        <viz:color r=\"" << int{color.r} << "\" g=\""
        << int{color.g} << "\" b=\"" << int{color.b} << "\"/>\n"
        << "      </node>\n";
  }
  out << "    </nodes>\n"
         "    <edges count=\"" << network.edge_count() << "\">\n";
  std::size_t edge_id = 0;
  for (const auto& [key, data] : network.edges()) {
    out << "      <edge id=\"" << edge_id++ << "\" source=\""
        << xml_escape(network.node(key.first).id) << "\" target=\""
        << xml_escape(network.node(key.second).id) << "\" weight=\""
        << data.weight << "\"/>\n";
  }
  out << "    </edges>\n  </graph>\n</gexf>\n";
}

CollabNetwork read_gexf(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree doc;
  try {
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorCode::MalformedRow, std::string("GEXF: ") + e.what());
  }
  const pt::ptree* graph = nullptr;
  try {
    graph = &doc.get_child("gexf.graph");
  } catch (const pt::ptree_bad_path&) {
    throw Error(ErrorCode::MalformedRow, "GEXF: missing <gexf><graph>");
  }

  std::vector<Institution> nodes;
  if (auto node_list = graph->get_child_optional("nodes")) {
    for (const auto& [tag, node] : *node_list) {
      if (tag != "node") continue;
      Institution inst;
      inst.id = node.get<std::string>("<xmlattr>.id");
      inst.name = node.get<std::string>("<xmlattr>.label", inst.id);
      std::optional<Category> category;
      if (auto values = node.get_child_optional("attvalues")) {
        for (const auto& [vtag, value] : *values) {
          if (vtag != "attvalue") continue;
          if (value.get<std::string>("<xmlattr>.for") == "category") {
            category = parse_category(value.get<std::string>("<xmlattr>.value"));
          }
        }
      }
      if (!category) {
        throw Error(ErrorCode::UnknownCategory,
                    "GEXF node `" + inst.id + "` lacks a valid category");
      }
      inst.category = *category;
      nodes.push_back(std::move(inst));
    }
  }

  std::vector<EdgeRecord> edges;
  if (auto edge_list = graph->get_child_optional("edges")) {
    for (const auto& [tag, edge] : *edge_list) {
      if (tag != "edge") continue;
      std::string a = edge.get<std::string>("<xmlattr>.source");
      std::string b = edge.get<std::string>("<xmlattr>.target");
      if (b < a) std::swap(a, b);
      const std::string w = edge.get<std::string>("<xmlattr>.weight", "1");
      edges.push_back({a, b, EdgeData{parse_weight(w, 0), {}}});
    }
  }
  return CollabNetwork(std::move(nodes), std::move(edges), false);
}

// ---------------------------------------------------------------------------

void write_dot(std::ostream& out, const CollabNetwork& network) {
  out << "graph collaborations {\n"
         "  node [style=filled, fontcolor=white];\n";
  for (NodeIndex i = 0; i < network.node_count(); ++i) {
    const Institution& n = network.node(i);
    out << "  " << dot_quote(n.id) << " [label=" << dot_quote(n.name)
        << ", category=" << to_token(n.category)
        << ", fillcolor=\"" << hex_color(category_color(n.category))
        << "\", weighted_degree=" << network.weighted_degree(i) << "];\n";
  }
  for (const auto& [key, data] : network.edges()) {
    out << "  " << dot_quote(network.node(key.first).id) << " -- "
        << dot_quote(network.node(key.second).id) << " [weight="
        << data.weight << "];\n";
  }
  out << "}\n";
}

void write_network_json(std::ostream& out, const CollabNetwork& network) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["nodes"] = ordered_json::array();
  for (NodeIndex i = 0; i < network.node_count(); ++i) {
    const Institution& n = network.node(i);
    doc["nodes"].push_back({{"id", n.id},
                            {"name", n.name},
                            {"category", to_token(n.category)},
                            {"degree", network.degree(i)},
                            {"weighted_degree", network.weighted_degree(i)}});
  }
  doc["edges"] = ordered_json::array();
  for (const EdgeRecord& e : network.edge_records()) {
    ordered_json edge = {{"source", e.a}, {"target", e.b},
                         {"weight", e.data.weight}};
    if (network.has_subjects()) edge["subjects"] = e.data.subjects;
    doc["edges"].push_back(std::move(edge));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace collabnet
