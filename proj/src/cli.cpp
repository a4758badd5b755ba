#include "orthokit/cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <utility>

#include "orthokit/decompositions.hpp"
#include "orthokit/eigen.hpp"
#include "orthokit/error.hpp"
#include "orthokit/lowdin.hpp"
#include "orthokit/pca.hpp"

namespace orthokit::cli {

namespace {

using nlohmann::json;

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands{{
    {Command::Symmetric, "symmetric"},
    {Command::Canonical, "canonical"},
    {Command::Polar, "polar"},
    {Command::Svd, "svd"},
    {Command::Pca, "pca"},
    {Command::Verify, "verify"},
    {Command::Relations, "relations"},
}};

struct Residual {
  double value;
  double tolerance;
};

class Session {
 public:
  explicit Session(const RunConfig& config) : config_(config) {}

  const ToleranceConfig& tol() const { return config_.tolerances; }

  void write(const std::string& factor, const DenseMatrix& m) {
    const auto path = config_.output_dir / (std::string(to_string(config_.command)) + "_" +
                                            factor + std::string(file_extension(config_.format)));
    write_matrix_file(path, m, config_.format, config_.output_precision);
    files_.push_back(path);
  }

  void write(const std::string& factor, const std::vector<double>& values) {
    write(factor, DenseMatrix::column_vector(values));
  }

  /// Records a residual; repeated names keep the worst value.
  void residual(const std::string& name, double value, double tolerance) {
    auto [it, inserted] = residuals_.try_emplace(name, Residual{value, tolerance});
    if (!inserted) it->second.value = std::max(it->second.value, value);
  }

  bool all_pass() const {
    return std::all_of(residuals_.begin(), residuals_.end(),
                       [](const auto& kv) { return kv.second.value <= kv.second.tolerance; });
  }

  json residuals_json() const {
    json out = json::object();
    for (const auto& [name, r] : residuals_) out[name] = r.value;
    return out;
  }

  json tolerances_json() const {
    json out = json::object();
    for (const auto& [name, r] : residuals_) out[name] = r.tolerance;
    return out;
  }

  std::vector<std::filesystem::path> take_files() { return std::move(files_); }

  json report = json::object();

 private:
  const RunConfig& config_;
  std::map<std::string, Residual> residuals_;
  std::vector<std::filesystem::path> files_;
};

double relative_to(double residual, const DenseMatrix& v) {
  const double scale = v.max_abs();
  return scale > 0.0 ? residual / scale : residual;
}

double max_relative_gap(const std::vector<double>& got, const std::vector<double>& want) {
  double gap = 0.0;
  for (std::size_t j = 0; j < want.size(); ++j) {
    const double denom = std::max(std::abs(want[j]), std::abs(got[j]));
    if (denom > 0.0) gap = std::max(gap, std::abs(got[j] - want[j]) / denom);
  }
  return gap;
}

void check_orthonormal(Session& s, const DenseMatrix& z) {
  s.residual("orthonormality", orthonormality_residual(z), s.tol().orthonormality_tol);
}

void run_symmetric(Session& s, const DenseMatrix& v, const HermitianEigen& eig, bool write) {
  const OrthonormalBasis phi = symmetric_orthogonalize(v, eig, s.tol());
  check_orthonormal(s, phi.matrix());
  if (write) s.write("Phi", phi.matrix());
}

void run_canonical(Session& s, const DenseMatrix& v, const HermitianEigen& eig, bool write) {
  const OrthonormalBasis lambda = canonical_orthogonalize(v, eig, s.tol());
  check_orthonormal(s, lambda.matrix());
  s.residual("projection_sum_gap",
             max_relative_gap(projection_square_sums(v, lambda), eig.eigenvalues),
             s.tol().reconstruction_tol);
  if (write) {
    s.write("Lambda", lambda.matrix());
    s.write("U", eig.eigenvectors);
    s.write("d", eig.eigenvalues);
  }
}

void run_polar(Session& s, const DenseMatrix& v, const HermitianEigen& eig, bool write) {
  const PolarFactors f = polar_decompose(v, eig, s.tol());
  check_orthonormal(s, f.orthonormal.matrix());
  s.residual("polar_reconstruction", relative_to(max_abs_diff(reconstruct_polar(f), v), v),
             s.tol().reconstruction_tol);
  if (write) {
    s.write("Phi", f.orthonormal.matrix());
    s.write("H", f.positive.matrix());
  }
}

void run_svd(Session& s, const DenseMatrix& v, const HermitianEigen& eig, bool write) {
  const SvdFactors f = reduced_svd(v, eig, s.tol());
  check_orthonormal(s, f.left);
  s.residual("svd_reconstruction", relative_to(max_abs_diff(reconstruct_svd(f), v), v),
             s.tol().reconstruction_tol);
  s.report["singular_values"] = f.singular_values;
  if (write) {
    s.write("W", f.left);
    s.write("sigma", f.singular_values);
    s.write("Udagger", conjugate_transpose(f.right.matrix()));
  }
}

void run_pca(Session& s, const DenseMatrix& v, bool write) {
  const SscpResult r = principal_components(v, s.tol());
  check_orthonormal(s, r.components);
  s.report["component_scores"] = r.component_scores;
  if (v.rows() >= v.cols()) {
    s.residual("gram_sscp_gap", gram_sscp_eigenvalue_check(v, s.tol()).max_relative_gap,
               s.tol().reconstruction_tol);
  }
  if (write) {
    s.write("S", r.sscp.matrix());
    s.write("components", r.components);
    s.write("scores", r.component_scores);
  }
}

void run_relations(Session& s, const DenseMatrix& v, const HermitianEigen& eig, bool write) {
  const OrthonormalBasis phi = symmetric_orthogonalize(v, eig, s.tol());
  const OrthonormalBasis lambda = canonical_orthogonalize(v, eig, s.tol());
  const UnitaryMatrix u(eig.eigenvectors);
  const OrthonormalBasis lambda_from_phi = canonical_from_symmetric(phi, u);
  const OrthonormalBasis phi_from_lambda = symmetric_from_canonical(lambda, u);
  const SvdFactors svd = reduced_svd(v, eig, s.tol());
  const OrthonormalBasis phi_from_svd = symmetric_from_svd(svd);

  check_orthonormal(s, phi.matrix());
  check_orthonormal(s, lambda.matrix());
  const double tol = s.tol().reconstruction_tol;
  s.residual("relation_lambda_phi_u", max_abs_diff(lambda.matrix(), lambda_from_phi.matrix()), tol);
  s.residual("relation_phi_lambda_udagger", max_abs_diff(phi.matrix(), phi_from_lambda.matrix()),
             tol);
  s.residual("relation_phi_w_udagger", max_abs_diff(phi.matrix(), phi_from_svd.matrix()), tol);
  if (write) {
    s.write("Phi", phi.matrix());
    s.write("Lambda", lambda.matrix());
    s.write("U", u.matrix());
    s.write("Lambda_from_Phi", lambda_from_phi.matrix());
    s.write("Phi_from_Lambda", phi_from_lambda.matrix());
    s.write("Phi_from_W", phi_from_svd.matrix());
  }
}

void dispatch(Session& s, Command command, const DenseMatrix& v, const HermitianEigen& eig) {
  switch (command) {
    case Command::Symmetric: run_symmetric(s, v, eig, true); break;
    case Command::Canonical: run_canonical(s, v, eig, true); break;
    case Command::Polar: run_polar(s, v, eig, true); break;
    case Command::Svd: run_svd(s, v, eig, true); break;
    case Command::Pca: run_pca(s, v, true); break;
    case Command::Relations: run_relations(s, v, eig, true); break;
    case Command::Verify:
      run_symmetric(s, v, eig, false);
      run_canonical(s, v, eig, false);
      run_polar(s, v, eig, false);
      run_svd(s, v, eig, false);
      run_pca(s, v, false);
      run_relations(s, v, eig, false);
      break;
  }
}

json error_json(const Error& e) {
  json out{{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (const auto* spectrum = dynamic_cast<const SpectrumError*>(&e)) {
    out["eigenvalue_index"] = spectrum->eigenvalue_index();
    out["eigenvalue"] = spectrum->eigenvalue();
    out["condition_estimate"] = spectrum->condition_estimate();
  }
  if (const auto* parse = dynamic_cast<const ParseError*>(&e)) {
    out["line"] = parse->line();
    out["column"] = parse->column();
    out["token"] = parse->token();
  }
  return out;
}

}  // namespace

std::string_view to_string(Command command) noexcept {
  for (const auto& [c, name] : kCommands) {
    if (c == command) return name;
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) noexcept {
  for (const auto& [c, n] : kCommands) {
    if (n == name) return c;
  }
  return std::nullopt;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [c, n] : kCommands) out.emplace_back(n);
    return out;
  }();
  return names;
}

RunResult execute(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Session session(config);
  json& report = session.report;
  report["command"] = to_string(config.command);
  report["input"] = {{"path", config.input_path.string()}};

  RunResult result;
  try {
    config.tolerances.validate();
    if (config.output_precision < 1 || config.output_precision > 17) {
      throw Error(ErrorKind::InvalidArgument, "precision must be in [1, 17]");
    }
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + config.output_dir.string());

    const DenseMatrix v = parse_matrix_file(config.input_path, config.format);
    report["input"]["rows"] = v.rows();
    report["input"]["cols"] = v.cols();

    const HermitianEigen eig = hermitian_eigen(gram_metric(v), config.tolerances);
    report["eigenvalues"] = eig.eigenvalues;
    report["condition_estimate"] = eig.condition_estimate();

    dispatch(session, config.command, v, eig);
    result.exit_status = session.all_pass() ? exit_code::ok : exit_code::check_failed;
  } catch (const Error& e) {
    report["error"] = error_json(e);
    result.exit_status = e.is_numerical() ? exit_code::numerical_error : exit_code::input_error;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "Internal"}, {"message", e.what()}};
    result.exit_status = exit_code::input_error;
  }

  report["residuals"] = session.residuals_json();
  report["tolerances"] = session.tolerances_json();
  report["pass"] = result.exit_status == exit_code::ok;
  report["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const auto report_path = config.output_dir / "report.json";
  std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
  if (out) {
    out << report.dump(2) << '\n';
  }
  if (!out && result.exit_status == exit_code::ok) result.exit_status = exit_code::input_error;

  result.files_written = session.take_files();
  if (out) result.files_written.push_back(report_path);
  result.report = std::move(report);
  return result;
}

}  // namespace orthokit::cli
