#include "evid/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "evid/closed_form.hpp"
#include "evid/combine.hpp"
#include "evid/discount.hpp"
#include "evid/errors.hpp"
#include "evid/oracle.hpp"

namespace evid::cli {

using json = nlohmann::ordered_json;

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

// Round to the 12 significant digits the CLI prints, so JSON and table
// output carry identical values.
double round12(double v) { return std::stod(format_value(v)); }

double parse_mass_value(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) {
    raise(errc::invalid_document, "mass must be a number or a string");
  }
  const std::string s = j.get<std::string>();
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      std::size_t used = 0;
      const long long num = std::stoll(s, &used);
      if (used != slash) throw std::invalid_argument(s);
      std::size_t used2 = 0;
      const std::string denom_part = s.substr(slash + 1);
      const long long den = std::stoll(denom_part, &used2);
      if (used2 != denom_part.size() || den == 0) {
        throw std::invalid_argument(s);
      }
      return static_cast<double>(num) / static_cast<double>(den);
    }
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    raise(errc::invalid_document, "bad mass value: \"" + s + "\"");
  }
}

std::vector<std::string> set_names(const Frame& frame, SubsetKey key) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if ((key.bits >> i) & 1u) out.push_back(frame.elements()[i]);
  }
  return out;
}

json mass_entries(const MassFunction& m) {
  json arr = json::array();
  for (const auto& [key, value] : focal_elements(m)) {
    json e;
    e["set"] = set_names(m.frame(), key);
    e["mass"] = round12(value);
    arr.push_back(std::move(e));
  }
  return arr;
}

json view_entries(const EvidentialView& v) {
  json arr = json::array();
  for (std::uint32_t a = 0; a < v.table.size(); ++a) {
    json e;
    e["set"] = set_names(v.frame, SubsetKey{a});
    e["value"] = round12(v.table[a]);
    arr.push_back(std::move(e));
  }
  return arr;
}

json mass_document(const MassFunction& m) {
  json doc;
  doc["frame"] = m.frame().elements();
  doc["masses"] = mass_entries(m);
  return doc;
}

void print_mass_lines(std::ostream& out, const MassFunction& m) {
  for (const auto& [key, value] : focal_elements(m)) {
    out << m.frame().subset_name(key) << ' ' << format_value(value) << '\n';
  }
}

void print_view_lines(std::ostream& out, const EvidentialView& v) {
  for (std::uint32_t a = 0; a < v.table.size(); ++a) {
    out << v.frame.subset_name(SubsetKey{a}) << ' '
        << format_value(v.table[a]) << '\n';
  }
}

MassFunction load_mass(const std::string& path) {
  return to_mass(load_document(path));
}

}  // namespace

EvidenceDocument parse_document(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    raise(errc::invalid_document, "evidence file is not a JSON object");
  }
  if (!j.contains("frame") || !j["frame"].is_array()) {
    raise(errc::invalid_document, "evidence file needs a \"frame\" array");
  }
  if (!j.contains("masses") || !j["masses"].is_array()) {
    raise(errc::invalid_document, "evidence file needs a \"masses\" array");
  }
  EvidenceDocument doc;
  for (const auto& e : j["frame"]) {
    if (!e.is_string()) {
      raise(errc::invalid_document, "frame elements must be strings");
    }
    doc.frame.push_back(e.get<std::string>());
  }
  for (const auto& e : j["masses"]) {
    if (!e.is_object() || !e.contains("set") || !e["set"].is_array() ||
        !e.contains("mass")) {
      raise(errc::invalid_document,
            "each mass entry needs a \"set\" array and a \"mass\" value");
    }
    MassEntry entry;
    for (const auto& name : e["set"]) {
      if (!name.is_string()) {
        raise(errc::invalid_document, "set members must be strings");
      }
      entry.set.push_back(name.get<std::string>());
    }
    entry.mass = parse_mass_value(e["mass"]);
    doc.masses.push_back(std::move(entry));
  }
  return doc;
}

EvidenceDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io_error, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

MassFunction to_mass(const EvidenceDocument& doc) {
  Frame frame = make_frame(doc.frame);
  std::vector<std::pair<SubsetKey, double>> assignments;
  assignments.reserve(doc.masses.size());
  for (const auto& entry : doc.masses) {
    assignments.emplace_back(subset_from_elements(frame, entry.set),
                             entry.mass);
  }
  return make_mass(frame, assignments);
}

EvidenceDocument document_from(const MassFunction& m) {
  EvidenceDocument doc;
  doc.frame = m.frame().elements();
  for (const auto& [key, value] : focal_elements(m)) {
    doc.masses.push_back(MassEntry{set_names(m.frame(), key), value});
  }
  return doc;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Dempster-Shafer evidential reasoning on finite frames"};
  app.name("evid");
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"table", "json"});
  const auto kind_check = CLI::IsMember({"mass", "bel", "pls", "com", "dou"});

  std::string v_file;
  auto* validate =
      app.add_subcommand("validate", "Check an evidence file");
  validate->add_option("file", v_file, "evidence file")->required();

  std::string t_to;
  std::string t_file;
  std::string t_format = "table";
  auto* transform = app.add_subcommand(
      "transform", "Tabulate an evidential function of the mass");
  transform->add_option("--to", t_to, "target function")
      ->required()
      ->check(kind_check);
  transform->add_option("file", t_file, "evidence file")->required();
  transform->add_option("--format", t_format, "table or json")
      ->check(format_check);

  std::vector<std::string> c_files;
  std::string c_method = "naive";
  std::string c_format = "table";
  bool c_oracle = false;
  auto* combine =
      app.add_subcommand("combine", "Orthogonal sum of evidence files");
  combine->add_option("files", c_files, "evidence files")
      ->required()
      ->expected(-1);
  combine->add_option("--method", c_method, "naive or commonality")
      ->check(CLI::IsMember({"naive", "commonality"}));
  combine->add_flag("--oracle", c_oracle,
                    "cross-check against the brute-force reference");
  combine->add_option("--format", c_format, "table or json")
      ->check(format_check);

  double d_rate = 0.0;
  std::string d_file;
  std::string d_format = "table";
  auto* discount =
      app.add_subcommand("discount", "Discount an evidence file at a rate");
  discount->add_option("--rate", d_rate, "rate in (0,1)")->required();
  discount->add_option("file", d_file, "evidence file")->required();
  discount->add_option("--format", d_format, "table or json")
      ->check(format_check);

  double o_rate = 0.0;
  std::vector<std::string> o_files;
  std::string o_kind = "mass";
  std::string o_format = "table";
  auto* orders = app.add_subcommand(
      "compare-orders",
      "Combine-then-discount vs discount-then-combine on two files");
  orders->add_option("--rate", o_rate, "rate in (0,1)")->required();
  orders->add_option("files", o_files, "two evidence files")
      ->required()
      ->expected(2);
  orders->add_option("--kind", o_kind, "function to compare")
      ->check(kind_check);
  orders->add_option("--format", o_format, "table or json")
      ->check(format_check);

  double r1 = 0.0;
  double r2 = 0.0;
  auto* compose = app.add_subcommand(
      "compose-rates", "Single rate equivalent to two successive discounts");
  compose->add_option("r1", r1, "first rate")->required();
  compose->add_option("r2", r2, "second rate")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      const MassFunction m = load_mass(v_file);
      out << "valid: " << m.frame().size() << " elements, "
          << focal_elements(m).size() << " focal sets\n";
    } else if (*transform) {
      const MassFunction m = load_mass(t_file);
      if (t_to == "mass") {
        if (t_format == "json") {
          out << mass_document(m).dump(2) << '\n';
        } else {
          out << "# transform to=mass\n";
          print_mass_lines(out, m);
        }
      } else {
        const EvidentialView v = to_view(m, view_kind_from_string(t_to));
        if (t_format == "json") {
          json doc;
          doc["frame"] = m.frame().elements();
          doc["kind"] = t_to;
          doc["values"] = view_entries(v);
          out << doc.dump(2) << '\n';
        } else {
          out << "# transform to=" << t_to << '\n';
          print_view_lines(out, v);
        }
      }
    } else if (*combine) {
      std::vector<MassFunction> ms;
      ms.reserve(c_files.size());
      for (const auto& path : c_files) ms.push_back(load_mass(path));
      const auto method = c_method == "naive" ? CombineMethod::naive
                                              : CombineMethod::commonality;
      const CombinationResult res = dempster_n(ms, method);
      if (c_oracle) {
        MassFunction ref = ms[0];
        for (std::size_t i = 1; i < ms.size(); ++i) {
          ref = oracle_dempster(ref, ms[i]);
        }
        for (std::size_t a = 0; a < ref.table().size(); ++a) {
          const double dev = std::abs(ref.table()[a] - res.mass.table()[a]);
          if (dev > 1e-9) {
            raise(errc::oracle_mismatch,
                  "fast path deviates from reference by " +
                      format_value(dev) + " at " +
                      ref.frame().subset_name(
                          SubsetKey{std::uint32_t(a)}));
          }
        }
      }
      if (c_format == "json") {
        json doc = mass_document(res.mass);
        doc["meta"]["method"] = c_method;
        doc["meta"]["normalization"] = round12(res.normalization);
        doc["meta"]["conflict"] = round12(res.conflict);
        out << doc.dump(2) << '\n';
      } else {
        out << "# combine method=" << c_method
            << " normalization=" << format_value(res.normalization)
            << " conflict=" << format_value(res.conflict) << '\n';
        print_mass_lines(out, res.mass);
      }
    } else if (*discount) {
      const MassFunction m = load_mass(d_file);
      const MassFunction res = discount_mass(m, DiscountRate(d_rate));
      if (d_format == "json") {
        json doc = mass_document(res);
        doc["meta"]["rate"] = round12(d_rate);
        out << doc.dump(2) << '\n';
      } else {
        out << "# discount rate=" << format_value(d_rate) << '\n';
        print_mass_lines(out, res);
      }
    } else if (*orders) {
      const MassFunction m1 = load_mass(o_files[0]);
      const MassFunction m2 = load_mass(o_files[1]);
      const OrderComparison cmp =
          compare_orders(m1, m2, DiscountRate(o_rate));
      double gap = cmp.max_abs_gap;
      SubsetKey witness = cmp.witness;
      json left_entries;
      json right_entries;
      std::ostringstream left_lines;
      std::ostringstream right_lines;
      if (o_kind == "mass") {
        left_entries = mass_entries(cmp.discounted_sum);
        right_entries = mass_entries(cmp.sum_of_discounted);
        print_mass_lines(left_lines, cmp.discounted_sum);
        print_mass_lines(right_lines, cmp.sum_of_discounted);
      } else {
        const ViewKind kind = view_kind_from_string(o_kind);
        const EvidentialView lv = to_view(cmp.discounted_sum, kind);
        const EvidentialView rv = to_view(cmp.sum_of_discounted, kind);
        gap = -1.0;
        for (std::uint32_t a = 0; a < lv.table.size(); ++a) {
          const double d = std::abs(lv.table[a] - rv.table[a]);
          if (d > gap) {
            gap = d;
            witness = SubsetKey{a};
          }
        }
        left_entries = view_entries(lv);
        right_entries = view_entries(rv);
        print_view_lines(left_lines, lv);
        print_view_lines(right_lines, rv);
      }
      if (o_format == "json") {
        json doc;
        doc["frame"] = m1.frame().elements();
        doc["kind"] = o_kind;
        doc["discounted_sum"] = left_entries;
        doc["sum_of_discounted"] = right_entries;
        doc["meta"]["rate"] = round12(o_rate);
        doc["meta"]["max_abs_gap"] = round12(gap);
        doc["meta"]["witness"] = set_names(m1.frame(), witness);
        out << doc.dump(2) << '\n';
      } else {
        out << "# compare-orders rate=" << format_value(o_rate)
            << " kind=" << o_kind << '\n';
        out << "discounted_sum:\n" << left_lines.str();
        out << "sum_of_discounted:\n" << right_lines.str();
        out << "max_abs_gap " << format_value(gap) << '\n';
        out << "witness " << m1.frame().subset_name(witness) << '\n';
      }
    } else if (*compose) {
      const DiscountRate composed =
          compose_rates(DiscountRate(r1), DiscountRate(r2));
      out << format_value(composed.value()) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace evid::cli
