#include "rom_mis/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace rommis {

void write_instance(std::ostream& os, const Instance& inst) {
    os << inst.dim << ' ' << inst.size();
    if (inst.declared_K)
        os << ' ' << inst.declared_K->str();
    os << '\n';
    auto put_box = [&](const HyperRect& h) {
        for (int j = 0; j < h.dim(); ++j) {
            if (j)
                os << ' ';
            os << h.lo(j).str() << ' ' << h.hi(j).str();
        }
    };
    if (inst.is_sigma()) {
        for (const auto& f : inst.sigmas) {
            put_box(f.out_box());
            os << ' ' << f.sigma().str() << ' ';
            put_box(f.in_box());
            os << '\n';
        }
    } else {
        for (const auto& r : inst.rects) {
            put_box(r);
            os << '\n';
        }
    }
}

Instance read_instance(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw ParseError("instance: missing header line");
    std::istringstream head(line);
    long long d = 0, n = -1;
    if (!(head >> d >> n) || d < 1 || n < 0)
        throw ParseError("instance: bad header '" + line + "'");
    Instance inst;
    inst.dim = static_cast<int>(d);
    std::string ktext;
    if (head >> ktext)
        inst.declared_K = Rational::parse(ktext);

    const std::size_t box_cols = static_cast<std::size_t>(2 * d);
    const std::size_t sigma_cols = static_cast<std::size_t>(4 * d + 1);
    std::vector<std::string> cols;
    for (long long i = 0; i < n; ++i) {
        if (!std::getline(is, line))
            throw ParseError("instance: expected " + std::to_string(n) + " objects, got " +
                             std::to_string(i));
        cols.clear();
        std::istringstream row(line);
        std::string tok;
        while (row >> tok)
            cols.push_back(tok);
        auto box_at = [&](std::size_t base) {
            std::vector<Rational> lo, hi;
            lo.reserve(d);
            hi.reserve(d);
            for (long long j = 0; j < d; ++j) {
                lo.push_back(Rational::parse(cols[base + 2 * j]));
                hi.push_back(Rational::parse(cols[base + 2 * j + 1]));
            }
            return HyperRect(std::move(lo), std::move(hi));
        };
        if (cols.size() == box_cols) {
            if (!inst.sigmas.empty())
                throw ParseError("instance: mixed box and sigma rows");
            inst.rects.push_back(box_at(0));
        } else if (cols.size() == sigma_cols) {
            if (!inst.rects.empty())
                throw ParseError("instance: mixed box and sigma rows");
            HyperRect out = box_at(0);
            Rational sigma = Rational::parse(cols[box_cols]);
            HyperRect in = box_at(box_cols + 1);
            inst.sigmas.emplace_back(std::move(out), std::move(in), std::move(sigma));
        } else {
            throw ParseError("instance: row " + std::to_string(i) + " has " +
                             std::to_string(cols.size()) + " columns, expected " +
                             std::to_string(box_cols) + " or " + std::to_string(sigma_cols));
        }
    }
    inst.validate();
    return inst;
}

void save_instance(const std::string& path, const Instance& inst) {
    std::ofstream os(path);
    if (!os)
        throw ParseError("cannot open for writing: " + path);
    write_instance(os, inst);
    if (!os)
        throw ParseError("write failed: " + path);
}

Instance load_instance(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw ParseError("cannot open: " + path);
    return read_instance(is);
}

} // namespace rommis
