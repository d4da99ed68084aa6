#include "cweno/time_integration.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cweno {

void ButcherTableau::validate() const {
  const auto s = static_cast<std::size_t>(stages);
  if (stages < 1) throw std::invalid_argument("tableau '" + name + "': no stages");
  if (A.size() != s * s || b.size() != s || c.size() != s) {
    throw std::invalid_argument("tableau '" + name + "': inconsistent sizes");
  }
  for (int i = 0; i < stages; ++i)
    for (int j = i; j < stages; ++j)
      if (a(i, j) != 0.0) throw std::invalid_argument("tableau '" + name + "': A must be strictly lower triangular");
  double sb = 0.0;
  for (double x : b) sb += x;
  if (std::abs(sb - 1.0) > 1e-12) throw std::invalid_argument("tableau '" + name + "': weights must sum to 1");
}

int ButcherTableau::linear_order(double tol) const {
  const auto s = static_cast<std::size_t>(stages);
  std::vector<double> v(s, 1.0);
  double fact = 1.0;
  int k = 0;
  for (int j = 1; j <= stages + 1; ++j) {
    fact *= j;
    double bv = 0.0;
    for (std::size_t i = 0; i < s; ++i) bv += b[i] * v[i];
    if (std::abs(bv - 1.0 / fact) > tol * std::max(1.0, 1.0 / fact)) break;
    k = j;
    std::vector<double> w(s, 0.0);
    for (int r = 0; r < stages; ++r)
      for (int q = 0; q < r; ++q) w[static_cast<std::size_t>(r)] += a(r, q) * v[static_cast<std::size_t>(q)];
    v = w;
  }
  return k;
}

namespace {

ButcherTableau make(std::string name, int order, int s, std::vector<double> A, std::vector<double> b,
                    std::vector<double> c) {
  ButcherTableau t{std::move(name), s, order, std::move(A), std::move(b), std::move(c)};
  t.validate();
  return t;
}

}  // namespace

ButcherTableau ButcherTableau::ssprk3() {
  return make("ssprk3", 3, 3,
              {0, 0, 0,
               1, 0, 0,
               0.25, 0.25, 0},
              {1.0 / 6, 1.0 / 6, 2.0 / 3}, {0, 1, 0.5});
}

ButcherTableau ButcherTableau::rk4() {
  return make("rk4", 4, 4,
              {0, 0, 0, 0,
               0.5, 0, 0, 0,
               0, 0.5, 0, 0,
               0, 0, 1, 0},
              {1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 6}, {0, 0.5, 0.5, 1});
}

ButcherTableau ButcherTableau::rk5() {
  return make("rk5", 5, 6,
              {0, 0, 0, 0, 0, 0,
               0.25, 0, 0, 0, 0, 0,
               0.125, 0.125, 0, 0, 0, 0,
               0, -0.5, 1, 0, 0, 0,
               3.0 / 16, 0, 0, 9.0 / 16, 0, 0,
               -3.0 / 7, 2.0 / 7, 12.0 / 7, -12.0 / 7, 8.0 / 7, 0},
              {7.0 / 90, 0, 32.0 / 90, 12.0 / 90, 32.0 / 90, 7.0 / 90}, {0, 0.25, 0.25, 0.5, 0.75, 1});
}

ButcherTableau ButcherTableau::dp8() {
  // eighth-order weights of the Dormand-Prince 8(5,3) pair
  const std::vector<double> A = {
      0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
      0.05260015195876773, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
      0.0197250569845379, 0.059175170953613701, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
      0.029587585476806851, 0, 0.088762756430420545, 0, 0, 0, 0, 0, 0, 0, 0, 0,
      0.24136513415926669, 0, -0.88454947932828609, 0.92483400326179199, 0, 0, 0, 0, 0, 0, 0, 0,
      0.037037037037037035, 0, 0, 0.17082860872947386, 0.12546768756682242, 0, 0, 0, 0, 0, 0, 0,
      0.037109375, 0, 0, 0.17025221101954405, 0.060216538980455959, -0.017578125, 0, 0, 0, 0, 0, 0,
      0.037092000118504789, 0, 0, 0.17038392571223998, 0.10726203044637328, -0.015319437748624402, 0.0082737891638140233, 0, 0, 0, 0, 0,
      0.62411095871607569, 0, 0, -3.3608926294469414, -0.86821934684172597, 27.59209969944671, 20.154067550477894, -43.489884181069961, 0, 0, 0, 0,
      0.47766253643826434, 0, 0, -2.4881146199716677, -0.59029082683684297, 21.230051448181193, 15.279233632882423, -33.288210968984863, -0.020331201708508627, 0, 0, 0,
      -0.9371424300859873, 0, 0, 5.1863724288440638, 1.0914373489967295, -8.1497870107469268, -18.520065659996959, 22.739487099350505, 2.4936055526796523, -3.0467644718982196, 0, 0,
      2.273310147516538, 0, 0, -10.534495466737249, -2.0008720582248625, -17.958931863118799, 27.94888452941996, -2.8589982771350235, -8.8728569335306293, 12.360567175794303, 0.64339274601576357, 0,
  };
  const std::vector<double> b = {0.054293734116568765, 0, 0, 0, 0, 4.4503128927524092, 1.8915178993145003, -5.8012039600105849, 0.3111643669578199, -0.15216094966251609, 0.20136540080403034, 0.044710615727772587};
  const std::vector<double> c = {0, 0.05260015195876773, 0.078900227938151601, 0.1183503419072274, 0.28164965809277259, 0.33333333333333331, 0.25, 0.30769230769230771, 0.6512820512820513, 0.59999999999999998, 0.8571428571428571, 1};
  return make("dp8", 8, 12, A, b, c);
}

ButcherTableau ButcherTableau::extrapolated_euler(int q) {
  if (q < 1 || q > 12) throw std::invalid_argument("extrapolated_euler: order must be in 1..12");
  const int s = 1 + q * (q - 1) / 2;
  std::vector<double> A(static_cast<std::size_t>(s * s), 0.0), b(static_cast<std::size_t>(s), 0.0),
      c(static_cast<std::size_t>(s), 0.0);
  auto at = [&](int i, int j) -> double& { return A[static_cast<std::size_t>(i * s + j)]; };
  int next = 1;
  for (int n = 1; n <= q; ++n) {
    // Lagrange weight of the n-step Euler result when extrapolating to zero step
    double gamma = 1.0;
    for (int i = 1; i <= q; ++i)
      if (i != n) gamma *= static_cast<double>(n) / (n - i);
    b[0] += gamma / n;
    const int first = next;
    for (int l = 1; l < n; ++l, ++next) {
      at(next, 0) = 1.0 / n;
      for (int p = first; p < next; ++p) at(next, p) = 1.0 / n;
      c[static_cast<std::size_t>(next)] = static_cast<double>(l) / n;
      b[static_cast<std::size_t>(next)] = gamma / n;
    }
  }
  // the weights sum to one only up to rounding; fold the residue into the shared stage
  double sb = 0.0;
  for (double x : b) sb += x;
  b[0] += 1.0 - sb;
  return make("extrap" + std::to_string(q), q, s, std::move(A), std::move(b), std::move(c));
}

ButcherTableau ButcherTableau::parse(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> values;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      // accept simple fractions such as 1/6
      const auto slash = tok.find('/');
      try {
        if (slash == std::string::npos) {
          values.push_back(std::stod(tok));
        } else {
          values.push_back(std::stod(tok.substr(0, slash)) / std::stod(tok.substr(slash + 1)));
        }
      } catch (const std::exception&) {
        throw std::invalid_argument("tableau '" + name + "': bad number '" + tok + "'");
      }
    }
  }
  if (values.empty()) throw std::invalid_argument("tableau '" + name + "': empty");
  const double sd = values[0];
  if (sd != std::floor(sd) || sd < 1 || sd > 64) throw std::invalid_argument("tableau '" + name + "': bad stage count");
  const auto s = static_cast<std::size_t>(sd);
  if (values.size() != 1 + s * s + 2 * s) {
    throw std::invalid_argument("tableau '" + name + "': expected " + std::to_string(1 + s * s + 2 * s) +
                                " numbers, found " + std::to_string(values.size()));
  }
  ButcherTableau t;
  t.name = name;
  t.stages = static_cast<int>(s);
  t.A.assign(values.begin() + 1, values.begin() + 1 + static_cast<long>(s * s));
  t.b.assign(values.begin() + 1 + static_cast<long>(s * s), values.begin() + 1 + static_cast<long>(s * s + s));
  t.c.assign(values.begin() + 1 + static_cast<long>(s * s + s), values.end());
  t.validate();
  t.order = t.linear_order();
  return t;
}

ButcherTableau ButcherTableau::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tableau file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

ButcherTableau tableau_by_name(const std::string& spec) {
  if (spec == "ssprk3") return ButcherTableau::ssprk3();
  if (spec == "rk4") return ButcherTableau::rk4();
  if (spec == "rk5") return ButcherTableau::rk5();
  if (spec == "dp8") return ButcherTableau::dp8();
  if (spec.rfind("extrap:", 0) == 0) return ButcherTableau::extrapolated_euler(std::stoi(spec.substr(7)));
  return ButcherTableau::load(spec);
}

ButcherTableau default_tableau(int spatial_order) {
  switch (spatial_order) {
    case 3: return ButcherTableau::ssprk3();
    case 5: return ButcherTableau::rk5();
    default: return ButcherTableau::dp8();
  }
}

}  // namespace cweno
