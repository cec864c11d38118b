#include "qsparith/phase_schedule.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qsparith {

double wrap_angle(double a) {
    const double two_pi = 2.0 * M_PI;
    double w = std::remainder(a, two_pi);
    if (w <= -M_PI) w += two_pi;
    return w;
}

std::vector<double> PhaseSchedule::evaluation_angles() const {
    std::vector<double> out = angles;
    if (end_offset && !out.empty()) {
        out.front() += M_PI / 2.0;
        out.back() += M_PI / 2.0;
    }
    return out;
}

double PhaseSchedule::antisymmetry_defect() const {
    const std::size_t n = angles.size();
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double r = std::abs(wrap_angle(angles[j] + angles[n - 1 - j]));
        worst = std::max(worst, r);
    }
    return worst;
}

void PhaseSchedule::validate(double tol) const {
    if (angles.size() != static_cast<std::size_t>(degree) + 1)
        throw std::invalid_argument("phase schedule: angle count must be degree + 1");
    if (degree < 0)
        throw std::invalid_argument("phase schedule: negative degree");
    Parity expect = (degree % 2 != 0) ? Parity::Odd : Parity::Even;
    if (parity != expect)
        throw std::invalid_argument(
            "phase schedule: parity field inconsistent with degree");
    if (antisymmetric && antisymmetry_defect() > tol)
        throw std::invalid_argument("phase schedule: antisymmetry defect above tolerance");
}

PhaseSchedule make_schedule(std::vector<double> bare_angles, bool end_offset,
                            double tol) {
    if (bare_angles.empty())
        throw std::invalid_argument("phase schedule: empty angle list");
    PhaseSchedule s;
    s.degree = static_cast<int>(bare_angles.size()) - 1;
    s.angles = std::move(bare_angles);
    s.end_offset = end_offset;
    s.parity = (s.degree % 2 != 0) ? Parity::Odd : Parity::Even;
    s.antisymmetric = s.antisymmetry_defect() <= tol;
    return s;
}

PhaseSchedule zero_schedule(int degree) {
    if (degree < 0) throw std::invalid_argument("zero_schedule: negative degree");
    return make_schedule(std::vector<double>(degree + 1, 0.0), false);
}

std::string to_phase_text(const PhaseSchedule& s) {
    std::ostringstream os;
    os << "degree=" << s.degree << "\n";
    os << "parity=" << (s.parity == Parity::Odd ? "odd" : "even") << "\n";
    os << "end_offset=" << (s.end_offset ? 1 : 0) << "\n";
    os << "antisymmetric=" << (s.antisymmetric ? 1 : 0) << "\n";
    char buf[64];
    for (double a : s.angles) {
        std::snprintf(buf, sizeof buf, "%.17g", a);
        os << buf << "\n";
    }
    return os.str();
}

PhaseSchedule parse_phase_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    PhaseSchedule s;
    bool saw_degree = false, saw_parity = false, saw_off = false, saw_anti = false;
    auto fail = [](const std::string& what) -> PhaseSchedule& {
        throw std::invalid_argument("phase file: " + what);
    };
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq != std::string::npos && !std::isdigit(static_cast<unsigned char>(line[0])) &&
            line[0] != '-' && line[0] != '+' && line[0] != '.') {
            std::string key = line.substr(0, eq);
            std::string val = line.substr(eq + 1);
            if (key == "degree") { s.degree = std::stoi(val); saw_degree = true; }
            else if (key == "parity") {
                if (val == "odd") s.parity = Parity::Odd;
                else if (val == "even") s.parity = Parity::Even;
                else fail("bad parity value '" + val + "'");
                saw_parity = true;
            }
            else if (key == "end_offset") { s.end_offset = val != "0"; saw_off = true; }
            else if (key == "antisymmetric") { s.antisymmetric = val != "0"; saw_anti = true; }
            else fail("unknown header '" + key + "'");
            continue;
        }
        std::size_t pos = 0;
        double a = std::stod(line, &pos);
        if (pos == 0) fail("unparseable angle line '" + line + "'");
        s.angles.push_back(a);
    }
    if (!saw_degree || !saw_parity || !saw_off || !saw_anti)
        fail("missing header line");
    s.validate(1e-9);
    return s;
}

void save_phase_file(const PhaseSchedule& s, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for write: " + path);
    f << to_phase_text(s);
}

PhaseSchedule load_phase_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open phase file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_phase_text(ss.str());
}

}  // namespace qsparith
