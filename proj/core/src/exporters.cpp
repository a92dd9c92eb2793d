#include "qpack/exporters.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qpack {

namespace {

std::string num17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// occupancy threshold that separates filled dots from open-circle centers;
// standard patterns use the 50% convention of the reference program
double occupancy_threshold(const Pattern& pat) {
    const double p = pat.info.p > 0.0 ? pat.info.p : 50.0;
    const std::size_t k = pat.points.empty() ? 0 : pat.points.front().source.size();
    return p * 2.0 * static_cast<double>(k) / 100.0;
}

}  // namespace

std::string format_f105(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%10.5f", v);
    std::string s = buf;
    // Fortran F-format drops the zero before the decimal point
    const std::size_t dotpos = s.find('.');
    if (dotpos != std::string::npos && dotpos > 0 && s[dotpos - 1] == '0' &&
        (dotpos == 1 || s[dotpos - 2] == ' ' || s[dotpos - 2] == '-')) {
        s.erase(dotpos - 1, 1);
        s.insert(s.begin(), ' ');
    }
    return s;
}

void write_pattern_csv(const Pattern& pattern, std::ostream& out) {
    // header-only output for an empty pattern defaults to the planar layout
    const int d = pattern.points.empty()
                      ? 2
                      : static_cast<int>(pattern.points.front().phys.size());
    const int k = pattern.points.empty()
                      ? static_cast<int>(pattern.info.translation.size())
                      : static_cast<int>(pattern.points.front().source.size());
    out << (d == 3 ? "x,y,z" : "x,y");
    for (int i = 1; i <= k; ++i) out << ",src_" << i;
    out << ",n\n";
    for (const ProjectedPoint& p : pattern.points) {
        for (std::size_t a = 0; a < p.phys.size(); ++a)
            out << (a ? "," : "") << num17(p.phys[a]);
        for (int c : p.source) out << ',' << c;
        out << ',' << p.occupation << '\n';
    }
}

void write_pattern_latex(const Pattern& pattern, std::ostream& out) {
    if (pattern.points.empty())
        throw std::invalid_argument("latex export needs a nonempty pattern");
    const double threshold = occupancy_threshold(pattern);
    out << "\\documentclass{article}\n\\begin{document}\n\\begin{figure}\n"
        << "\\setlength{\\unitlength}{1.5mm}\n\\begin{picture}(50,20)(0,0)\n";
    for (const ProjectedPoint& p : pattern.points) {
        if (p.occupation > threshold) continue;
        out << "\\put( " << format_f105(10.0 + p.phys[0]) << ','
            << format_f105(20.0 + p.phys[1]) << "){\\circle*{0.2}} \n";
    }
    for (const ProjectedPoint& p : pattern.points) {
        if (p.occupation <= threshold) continue;
        out << "\\put( " << format_f105(10.0 + p.phys[0]) << ','
            << format_f105(20.0 + p.phys[1]) << "){\\circle{0.4}} \n";
    }
    out << "\\end{picture}\n\\caption{Quasiperiodic set obtained by the strip "
           "projection method}\n\\end{figure}\n\\end{document}\n";
}

void write_pattern_svg(const Pattern& pattern, std::ostream& out) {
    if (pattern.points.empty())
        throw std::invalid_argument("svg export needs a nonempty pattern");
    const double threshold = occupancy_threshold(pattern);
    double lo = 0.0, hi = 0.0;
    for (const ProjectedPoint& p : pattern.points) {
        lo = std::min({lo, p.phys[0], p.phys[1]});
        hi = std::max({hi, p.phys[0], p.phys[1]});
    }
    const double pad = 1.0, scale = 20.0;
    const double size = (hi - lo + 2 * pad) * scale;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
        << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    for (const ProjectedPoint& p : pattern.points) {
        const double cx = (p.phys[0] - lo + pad) * scale;
        const double cy = size - (p.phys[1] - lo + pad) * scale;  // y up
        if (p.occupation > threshold)
            out << "<circle cx=\"" << cx << "\" cy=\"" << cy
                << "\" r=\"4\" fill=\"none\" stroke=\"black\"/>\n";
        else
            out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
}

void write_map_csv(const DiffractionMap& map, std::ostream& out) {
    for (int i = 0; i < map.grid.counts[0]; ++i) {
        for (int j = 0; j < map.grid.counts[1]; ++j)
            out << (j ? "," : "") << num17(map.at(i, j));
        out << '\n';
    }
}

void write_peaks_csv(const std::vector<Peak>& peaks, std::ostream& out) {
    out << "xi_x,xi_y,intensity\n";
    for (const Peak& p : peaks)
        out << num17(p.xi[0]) << ',' << num17(p.xi[1]) << ',' << num17(p.value) << '\n';
}

Pattern read_pattern_csv(std::istream& in) {
    Pattern pat;
    std::string line;
    if (!std::getline(in, line)) return pat;
    int d = 2;
    {
        std::stringstream hs(line);
        std::string col;
        d = 0;
        while (std::getline(hs, col, ',')) {
            if (col == "x" || col == "y" || col == "z") ++d;
        }
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (static_cast<int>(cells.size()) < d + 1)
            throw std::runtime_error("pattern csv: malformed row");
        ProjectedPoint p;
        for (int a = 0; a < d; ++a) p.phys.push_back(std::stod(cells[a]));
        for (std::size_t c = d; c + 1 < cells.size(); ++c)
            p.source.push_back(std::stoi(cells[c]));
        p.occupation = std::stoi(cells.back());
        pat.points.push_back(std::move(p));
    }
    return pat;
}

std::vector<std::string> export_pattern(const Pattern& pattern, const std::string& dir,
                                        const std::string& stem,
                                        const std::vector<std::string>& formats) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::vector<std::string> written;
    for (const std::string& fmt : formats) {
        const std::string ext = fmt == "latex" ? "tex" : fmt;
        const std::string path = (fs::path(dir) / (stem + "." + ext)).string();
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        if (fmt == "csv") write_pattern_csv(pattern, out);
        else if (fmt == "latex") write_pattern_latex(pattern, out);
        else if (fmt == "svg") write_pattern_svg(pattern, out);
        else throw std::invalid_argument("unknown export format: " + fmt);
        written.push_back(path);
    }
    return written;
}

}  // namespace qpack
