#pragma once

#include <map>
#include <string>
#include <vector>

#include "gradalg/gmod.hpp"
#include "gradalg/kleisli.hpp"
#include "json.hpp"

namespace gradalg::io {

using json = nlohmann::json;

inline constexpr const char* kVersion = "1";

struct ParseOptions {
  int max_root_order = 240;
};

// Scalars: JSON integers, strings "3", "-2/5", "i", "-i", "z8", "-z8^3", or {"N", "num", "den"}.
Cyclotomic parse_scalar(const json& j, const std::string& path, const ParseOptions& opt = {});
json scalar_to_json(const Cyclotomic& c);

FinAbGroup parse_group(const json& j, const std::string& path);
json group_to_json(const FinAbGroup& g);
Cochain2 parse_cochain2(const json& j, const std::string& path, const ParseOptions& opt = {});
Cochain3 parse_cochain3(const json& j, const std::string& path, const ParseOptions& opt = {});
json cochain_to_json(const FinAbGroup& g, const std::vector<Cyclotomic>& values);
json cochain_to_json(const Cochain2& c);
json cochain_to_json(const Cochain3& c);

Host parse_host(const json& j, const std::string& path, const ParseOptions& opt = {});
HostObject parse_object(const json& j, const HostContext& h, const std::string& path, const ParseOptions& opt = {});
json object_to_json(const HostContext& h, const HostObject& x);
// Matrix shape is fixed by the objects; "blocks" address host grades i -> j.
Matrix parse_morphism(const json& j, const HostContext& h, const HostObject& src, const HostObject& dst,
                      const std::string& path, const ParseOptions& opt = {});
json morphism_to_json(const HostContext& h, const HostObject& src, const HostObject& dst, const Matrix& m);
json matrix_to_json(const Matrix& m);

json violation_to_json(const Violation& v);
json violations_to_json(const std::vector<Violation>& vs);
json algebra_to_json(const GradedAlgebra& a);
json graded_dims_to_json(const std::map<int, std::size_t>& dims);
json kleisli_to_json(const GradedAlgebra& a, const KleisliMorphism& f);

struct Task {
  std::string id;
  std::string command;
  json args;
};

struct Workspace {
  std::string version;
  Host host;
  std::map<std::string, HostObject> objects;
  std::vector<std::string> object_order;  // declaration order
  std::map<std::string, Cochain2> cochains2;
  std::map<std::string, Cochain3> cochains3;
  std::map<std::string, GradedAlgebra> algebras;
  std::map<std::string, FrobeniusData> frobenius;  // keyed by algebra name
  std::map<std::string, Module> modules;
  std::vector<Task> tasks;

  const HostObject& object(const std::string& name, const std::string& path) const;
  const GradedAlgebra& algebra(const std::string& name, const std::string& path) const;
  const Cochain2& cochain2(const std::string& name, const std::string& path) const;
  const Cochain3& cochain3(const std::string& name, const std::string& path) const;
  const Module& module(const std::string& name, const std::string& path) const;
};

Workspace load_workspace(const json& j, const ParseOptions& opt = {});
Workspace load_workspace_file(const std::string& file, const ParseOptions& opt = {});

// Key-sorted, two-space indented, trailing newline.
std::string serialize(const json& report);

}  // namespace gradalg::io
