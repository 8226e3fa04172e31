#pragma once

#include <map>
#include <string>
#include <vector>

#include "kcont/audit.hpp"
#include "kcont/continuation.hpp"
#include "kcont/kirchhoff.hpp"

namespace kcont {

/// Round-trippable formatting used by every CSV export ("%.17g").
std::string format_double(double x);

void export_grid_csv(const std::string& path, const Mesh1D& mesh, const GridFunction& u);

/// Columns: index,lambda,w_sup,u_sup,grad_u_sq,arclength,fold_flag.
void export_branch_csv(const std::string& path, const Branch& branch);

/// Plot data: lambda,w_sup,fold_flag. Header-only for an empty branch.
void export_diagram(const std::string& path, const Branch& branch);

void export_audit_json(const std::string& path, const AuditReport& report);

void export_solutions_json(const std::string& path, const std::vector<P1Solution>& roots);

/// Run manifest. timestamp and timings_ms are the only wall-clock content;
/// determinism comparisons strip exactly those two fields.
struct Manifest {
  std::string subcommand;
  std::string config_hash;
  int mesh_n = 0;
  double lambda1_h = 0.0;
  std::map<std::string, std::string> results;
  std::vector<std::string> outputs;  // basenames
  std::map<std::string, double> timings_ms;
};
void write_manifest(const std::string& path, const Manifest& manifest);

}  // namespace kcont
