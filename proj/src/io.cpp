#include "ellis/io.hpp"

#include <sstream>
#include <stdexcept>

#include "ellis/greens.hpp"

namespace ellis {

  nlohmann::ordered_json cayley_to_json(FiniteSemigroup const& S) {
    nlohmann::ordered_json j;
    j["elements"] = nlohmann::ordered_json::array();
    for (index_t i = 0; i < S.size(); ++i) {
      if (S.has_transformations()) {
        auto im = S.element(i).images();
        j["elements"].push_back(std::vector<point_t>(im.begin(), im.end()));
      } else {
        j["elements"].push_back(S.label(i));
      }
    }
    j["table"]      = S.table();
    j["generators"] = S.generators();
    return j;
  }

  FiniteSemigroup cayley_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("table") || !j["table"].is_array()) {
      throw std::invalid_argument("Cayley JSON needs a \"table\" array");
    }
    std::vector<std::vector<index_t>> table;
    try {
      table = j["table"].get<std::vector<std::vector<index_t>>>();
    } catch (nlohmann::json::exception const& e) {
      throw std::invalid_argument(std::string("bad Cayley table: ") + e.what());
    }
    std::vector<index_t> gens;
    if (j.contains("generators")) {
      gens = j["generators"].get<std::vector<index_t>>();
    }
    std::vector<std::string>    labels;
    std::vector<Transformation> maps;
    if (j.contains("elements")) {
      auto const& el = j["elements"];
      if (!el.is_array() || el.size() != table.size()) {
        throw std::invalid_argument("\"elements\" must list one entry per table row");
      }
      for (std::size_t i = 0; i < el.size(); ++i) {
        if (el[i].is_string()) {
          labels.push_back(el[i].get<std::string>());
        } else if (el[i].is_array()) {
          maps.emplace_back(el[i].get<std::vector<point_t>>());
        } else {
          throw std::invalid_argument("element " + std::to_string(i)
                                      + " is neither a label nor an image array");
        }
      }
      if (!labels.empty() && !maps.empty()) {
        throw std::invalid_argument("\"elements\" mixes labels and image arrays");
      }
    }
    if (j.contains("labels")) {
      labels = j["labels"].get<std::vector<std::string>>();
    }
    auto S = FiniteSemigroup::from_table(table, std::move(gens), std::move(labels));
    if (!maps.empty()) {
      S.set_elements(std::move(maps));  // checks them against the table
    }
    return S;
  }

  namespace {
    std::string escape_html(std::string const& s) {
      std::string out;
      for (char c : s) {
        switch (c) {
          case '<': out += "&lt;"; break;
          case '>': out += "&gt;"; break;
          case '&': out += "&amp;"; break;
          case '"': out += "&quot;"; break;
          default: out += c;
        }
      }
      return out;
    }
  }  // namespace

  std::string eggbox_dot(FiniteSemigroup const& S, std::string const& name) {
    auto const         G = greens(S);
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    os << "  node [shape=plaintext];\n";
    for (auto const& box : G.eggbox) {
      os << "  subgraph cluster_D" << box.d_class << " {\n";
      os << "    label=\"D" << box.d_class << "\";\n";
      os << "    D" << box.d_class << " [label=<<table border=\"0\" cellborder=\"1\" "
         << "cellspacing=\"0\">\n";
      for (auto const& row : box.cells) {
        os << "      <tr>";
        for (index_t h : row) {
          auto const& H = G.h_classes[h];
          os << "<td" << (is_group(S, H) ? " bgcolor=\"lightgray\"" : "") << ">";
          for (std::size_t k = 0; k < H.size(); ++k) {
            os << (k ? "<br/>" : "") << escape_html(S.label(H[k]));
          }
          os << "</td>";
        }
        os << "</tr>\n";
      }
      os << "    </table>>];\n  }\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace ellis
