#include "catdeco/field_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace catdeco {

namespace {

std::vector<double> split_numbers(const std::string& line, int line_no) {
    std::string s = line;
    for (char& ch : s) {
        if (ch == ',') ch = ' ';
    }
    std::istringstream in(s);
    std::vector<double> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error("line " + std::to_string(line_no) + ": not a number: " + tok);
        }
    }
    return out;
}

bool is_blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

struct Row {
    double x, y, v;
};

RealField field_from_rows(const std::vector<Row>& rows) {
    if (rows.empty()) throw Error("empty grid");
    int nx = 1;
    while (nx < static_cast<int>(rows.size()) && rows[nx].y == rows[0].y) ++nx;
    if (rows.size() % nx != 0) throw Error("grid rows are ragged");
    const int ny = static_cast<int>(rows.size()) / nx;
    if (nx < 2 || ny < 2) throw Error("grid too small");
    GridSpec g{rows[0].x, rows[nx - 1].x, rows[0].y, rows.back().y, nx, ny};
    g.validate();
    RealField f(g);
    const double tol = 1e-9 * std::max({1.0, std::abs(g.x_min), std::abs(g.x_max), std::abs(g.y_min), std::abs(g.y_max)});
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const Row& r = rows[static_cast<std::size_t>(j) * nx + i];
            if (std::abs(r.x - g.x(i)) > tol || std::abs(r.y - g.y(j)) > tol) throw Error("grid is not uniform");
            f.values(j, i) = r.v;
        }
    }
    return f;
}

std::vector<Row> read_rows(std::istream& is, int& line_no) {
    std::vector<Row> rows;
    std::string line;
    while (std::getline(is, line)) {
        ++line_no;
        if (is_blank(line) || line[0] == '#') continue;
        const auto nums = split_numbers(line, line_no);
        if (nums.size() != 3) throw Error("line " + std::to_string(line_no) + ": expected 3 columns");
        rows.push_back({nums[0], nums[1], nums[2]});
    }
    return rows;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_real_csv(std::ostream& os, const RealField& f) {
    os << "# x y value\n";
    const auto& g = f.spec;
    for (int j = 0; j < g.ny; ++j) {
        const std::string y = format_double(g.y(j));
        for (int i = 0; i < g.nx; ++i) {
            os << format_double(g.x(i)) << ',' << y << ',' << format_double(f.values(j, i)) << '\n';
        }
    }
}

RealField read_real_csv(std::istream& is) {
    int line_no = 0;
    return field_from_rows(read_rows(is, line_no));
}

void write_complex_csv(std::ostream& os, const ComplexField& c) {
    os << "# u v re im\n";
    for (int jv = 0; jv < c.spec.ny; ++jv) {
        const std::string v = format_double(c.v(jv));
        for (int iu = 0; iu < c.spec.nx; ++iu) {
            const cplx z = c.at(iu, jv);
            os << format_double(c.u(iu)) << ',' << v << ',' << format_double(z.real()) << ','
               << format_double(z.imag()) << '\n';
        }
    }
}

void write_ordered_csv(std::ostream& os, const OrderedDistribution& d) {
    os << "# s=" << format_double(d.s) << '\n';
    write_real_csv(os, d.field);
}

OrderedDistribution read_ordered_csv(std::istream& is) {
    std::string first;
    if (!std::getline(is, first) || first.rfind("# s=", 0) != 0) throw Error("line 1: expected '# s=<value>' header");
    const auto nums = split_numbers(first.substr(4), 1);
    if (nums.size() != 1) throw Error("line 1: malformed ordering parameter");
    int line_no = 1;
    return {field_from_rows(read_rows(is, line_no)), nums[0]};
}

void write_fock_csv(std::ostream& os, const FockDensityMatrix& rho) {
    os << "# m n re im\n";
    for (int m = 0; m <= rho.cutoff; ++m) {
        for (int n = m; n <= rho.cutoff; ++n) {
            const cplx z = rho.rho(m, n);
            os << m << ',' << n << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
        }
    }
}

FockDensityMatrix read_fock_csv(std::istream& is) {
    struct Entry {
        int m, n;
        cplx z;
    };
    std::vector<Entry> entries;
    int top = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (is_blank(line) || line[0] == '#') continue;
        const auto nums = split_numbers(line, line_no);
        if (nums.size() != 4) throw Error("line " + std::to_string(line_no) + ": expected 4 columns");
        const int m = static_cast<int>(nums[0]), n = static_cast<int>(nums[1]);
        if (m < 0 || n < m || m != nums[0] || n != nums[1]) {
            throw Error("line " + std::to_string(line_no) + ": indices must satisfy 0 <= m <= n");
        }
        entries.push_back({m, n, cplx(nums[2], nums[3])});
        top = std::max(top, n);
    }
    if (entries.empty()) throw Error("empty density matrix");
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(top + 1, top + 1);
    for (const auto& e : entries) {
        r(e.m, e.n) = e.z;
        r(e.n, e.m) = std::conj(e.z);
    }
    return FockDensityMatrix(std::move(r));
}

std::string render_ppm(const RealField& f) {
    if (f.values.size() == 0) throw Error("empty grid");
    const auto& g = f.spec;
    const double m = f.values.cwiseAbs().maxCoeff();
    std::string out = "P6\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n255\n";
    out.reserve(out.size() + 3 * static_cast<std::size_t>(g.nx) * g.ny);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double t = (m > 0.0) ? f.values(j, i) / m : 0.0;
            const auto fade = static_cast<unsigned char>(std::lround(255.0 * (1.0 - std::abs(t))));
            if (t >= 0.0) {
                out += static_cast<char>(255);
                out += static_cast<char>(fade);
                out += static_cast<char>(fade);
            } else {
                out += static_cast<char>(fade);
                out += static_cast<char>(fade);
                out += static_cast<char>(255);
            }
        }
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("cannot open " + tmp.string() + " for writing");
        os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!os) throw Error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

RealField load_real_csv(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open " + path.string());
    return read_real_csv(is);
}

void save_real_csv(const std::filesystem::path& path, const RealField& f) {
    std::ostringstream os;
    write_real_csv(os, f);
    write_file_atomic(path, os.str());
}

}  // namespace catdeco
