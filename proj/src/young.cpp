#include "capelli/young.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace capelli {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("YoungDiagram: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

YoungDiagram YoungDiagram::parse(const std::string& s) {
    std::vector<int> parts;
    std::string token;
    std::istringstream is(s);
    while (std::getline(is, token, ',')) {
        if (token.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument("YoungDiagram: bad part '" + token + "'");
        parts.push_back(v);
    }
    return YoungDiagram(std::move(parts));
}

std::vector<YoungDiagram> YoungDiagram::all_with_boxes(int n) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxPart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxPart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<int> YoungDiagram::conjugate() const {
    std::vector<int> cols;
    if (parts_.empty()) return cols;
    cols.resize(parts_[0]);
    for (int s = 0; s < parts_[0]; ++s)
        cols[s] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                 [&](int p) { return p >= s + 1; }));
    return cols;
}

int YoungDiagram::rank() const {
    int r = 0;
    for (size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i] >= static_cast<int>(i) + 1) ++r;
    return r;
}

bool YoungDiagram::contained_in(const YoungDiagram& mu) const {
    for (size_t i = 0; i < parts_.size(); ++i) {
        int other = i < mu.parts_.size() ? mu.parts_[i] : 0;
        if (parts_[i] > other) return false;
    }
    return true;
}

std::string YoungDiagram::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

StandardTableau::StandardTableau(YoungDiagram shape, std::vector<std::vector<int>> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    int n = shape_.size();
    if (static_cast<int>(entries_.size()) != shape_.rows())
        throw std::invalid_argument("StandardTableau: row count mismatch");
    std::vector<bool> seen(n, false);
    for (int r = 0; r < shape_.rows(); ++r) {
        if (static_cast<int>(entries_[r].size()) != shape_.parts()[r])
            throw std::invalid_argument("StandardTableau: row length mismatch");
        for (int c = 0; c < static_cast<int>(entries_[r].size()); ++c) {
            int v = entries_[r][c];
            if (v < 1 || v > n || seen[v - 1])
                throw std::invalid_argument("StandardTableau: not a bijective filling");
            seen[v - 1] = true;
            if (c > 0 && entries_[r][c - 1] >= v)
                throw std::invalid_argument("StandardTableau: rows must increase");
            if (r > 0 && entries_[r - 1][c] >= v)
                throw std::invalid_argument("StandardTableau: columns must increase");
        }
    }
}

std::vector<StandardTableau> standard_tableaux(const YoungDiagram& shape) {
    std::vector<StandardTableau> out;
    int rows = shape.rows();
    std::vector<std::vector<int>> grid(rows);
    std::vector<int> filled(rows, 0);
    for (int r = 0; r < rows; ++r) grid[r].assign(shape.parts()[r], 0);
    std::function<void(int)> rec = [&](int next) {
        if (next > shape.size()) {
            out.emplace_back(shape, grid);
            return;
        }
        for (int r = 0; r < rows; ++r) {
            int c = filled[r];
            if (c >= shape.parts()[r]) continue;
            if (r > 0 && filled[r - 1] <= c) continue;  // box above must be filled
            grid[r][c] = next;
            ++filled[r];
            rec(next + 1);
            --filled[r];
        }
    };
    rec(1);
    return out;
}

namespace {

struct ColumnTableau {
    std::vector<int> row_of;  // 1-based row of number i (index i-1)
    std::vector<int> col_of;
    std::vector<std::vector<int>> row_members;  // numbers in each row
    std::vector<std::vector<int>> col_members;  // numbers in each column
};

ColumnTableau column_tableau(const YoungDiagram& shape) {
    ColumnTableau ct;
    std::vector<int> cols = shape.conjugate();
    ct.row_of.resize(shape.size());
    ct.col_of.resize(shape.size());
    ct.row_members.resize(shape.rows());
    ct.col_members.resize(cols.size());
    int k = 0;
    for (size_t s = 0; s < cols.size(); ++s) {
        for (int r = 0; r < cols[s]; ++r) {
            ct.row_of[k] = r + 1;
            ct.col_of[k] = static_cast<int>(s) + 1;
            ct.row_members[r].push_back(k + 1);
            ct.col_members[s].push_back(k + 1);
            ++k;
        }
    }
    return ct;
}

// Enumerates all permutations of S_n preserving each block of the given
// set partition, applying fn to every one.
void for_each_block_permutation(int n, const std::vector<std::vector<int>>& blocks,
                                const std::function<void(const Permutation&, int)>& fn) {
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    std::function<void(size_t, int)> rec = [&](size_t b, int sign) {
        if (b == blocks.size()) {
            fn(Permutation::from_images(img), sign);
            return;
        }
        std::vector<int> perm = blocks[b];
        std::sort(perm.begin(), perm.end());
        do {
            int s = sign;
            // Count inversions for the block's sign contribution.
            for (size_t i = 0; i < perm.size(); ++i)
                for (size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j]) s = -s;
            for (size_t i = 0; i < perm.size(); ++i) img[blocks[b][i] - 1] = perm[i];
            rec(b + 1, s);
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int v : blocks[b]) img[v - 1] = v;
    };
    rec(0, 1);
}

}  // namespace

std::vector<int> contents(const YoungDiagram& shape) {
    ColumnTableau ct = column_tableau(shape);
    std::vector<int> c(shape.size());
    for (int i = 0; i < shape.size(); ++i) c[i] = ct.col_of[i] - ct.row_of[i];
    return c;
}

std::vector<int> column_tableau_rows(const YoungDiagram& shape) {
    return column_tableau(shape).row_of;
}

std::vector<int> column_tableau_cols(const YoungDiagram& shape) {
    return column_tableau(shape).col_of;
}

std::vector<int> reading_word(const YoungDiagram& shape) {
    ColumnTableau ct = column_tableau(shape);
    std::vector<int> word;
    for (const auto& row : ct.row_members)
        for (int v : row) word.push_back(v);
    return word;
}

Symmetrizers symmetrizers(const YoungDiagram& shape) {
    int n = shape.size();
    ColumnTableau ct = column_tableau(shape);
    GroupAlgebraElement<Rational> P(n), Q(n);
    for_each_block_permutation(n, ct.row_members,
                               [&](const Permutation& p, int) { P.accumulate(p, Rational(1)); });
    for_each_block_permutation(n, ct.col_members,
                               [&](const Permutation& p, int s) { Q.accumulate(p, Rational(s)); });
    Rational scale(1);
    for (int len : shape.conjugate()) scale = scale * Rational::factorial(len);
    GroupAlgebraElement<Rational> Phi = (Q * P * Q) * scale.inverse();
    return {std::move(P), std::move(Q), std::move(Phi)};
}

long hook_length_dimension(const YoungDiagram& shape) {
    if (shape.size() == 0) return 1;
    std::vector<int> cols = shape.conjugate();
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(shape.size()));
    mpz_class den = 1;
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.parts()[r]; ++c) {
            long hook = (shape.parts()[r] - c) + (cols[c] - r) - 1;
            den *= hook;
        }
    mpz_class q = num / den;
    if (q * den != num) throw std::logic_error("hook length formula: inexact");
    return q.get_si();
}

long dimension(const YoungDiagram& shape) {
    static std::map<std::vector<int>, long> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(shape.parts());
        if (it != memo.end()) return it->second;
    }
    long by_enum = static_cast<long>(standard_tableaux(shape).size());
    long by_hooks = hook_length_dimension(shape);
    if (by_enum != by_hooks)
        throw std::logic_error("dimension: tableau count disagrees with hook lengths for " +
                               shape.str());
    std::lock_guard<std::mutex> lock(mtx);
    memo[shape.parts()] = by_enum;
    return by_enum;
}

namespace {

// Murnaghan-Nakayama: chi_lambda(rho) = sum over removable border strips
// of length rho_1, of (-1)^height * chi_{lambda minus strip}(rest of rho).
//
// A strip occupying rows start..end is determined by the rows alone:
// row i in [start, end) keeps parts[i+1]-1 boxes and row end keeps
// parts[start] - strip + (end - start).  Intermediate rows are then
// automatically valid; only the bottom row needs checking.
Rational mn_recursion(std::vector<int> parts, std::vector<int> rho) {
    if (rho.empty()) return Rational(1);
    int strip = rho[0];
    std::vector<int> rest(rho.begin() + 1, rho.end());
    Rational total(0);
    int rows = static_cast<int>(parts.size());
    for (int start = 0; start < rows; ++start) {
        for (int end = start; end < rows; ++end) {
            int bottom = parts[start] - strip + (end - start);
            if (bottom < 0) continue;
            if (bottom > parts[end] - 1) continue;  // bottom row must lose a box
            if (end + 1 < rows && bottom < parts[end + 1]) continue;
            std::vector<int> np = parts;
            for (int i = start; i < end; ++i) np[i] = parts[i + 1] - 1;
            np[end] = bottom;
            while (!np.empty() && np.back() == 0) np.pop_back();
            Rational sub = mn_recursion(std::move(np), rest);
            total += ((end - start) % 2 == 0 ? sub : -sub);
        }
    }
    return total;
}

}  // namespace

Rational character_on_cycle_type(const YoungDiagram& shape, const std::vector<int>& rho) {
    long boxes = 0;
    for (int r : rho) boxes += r;
    if (boxes != shape.size())
        throw std::invalid_argument("character: cycle type size mismatch");
    std::vector<int> sorted = rho;
    std::sort(sorted.rbegin(), sorted.rend());
    return mn_recursion(shape.parts(), sorted);
}

Rational character(const YoungDiagram& shape, const Permutation& sigma) {
    if (sigma.degree() != shape.size())
        throw std::invalid_argument("character: permutation degree mismatch");
    if (shape.size() == 0) return Rational(1);
    return character_on_cycle_type(shape, sigma.cycle_type());
}

Rational character_via_matrix_element(const YoungDiagram& shape, const Permutation& sigma) {
    // chi(s) = (dim/n!) * sum_g [Phi]_{g^{-1} s g}: trace of left
    // multiplication by s on the left ideal generated by the idempotent.
    int n = shape.size();
    GroupAlgebraElement<Rational> Phi = symmetrizers(shape).Phi;
    Rational total(0);
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    std::sort(img.begin(), img.end());
    do {
        Permutation g = Permutation::from_images(img);
        total += Phi.coefficient(g.inverse() * sigma * g);
    } while (std::next_permutation(img.begin(), img.end()));
    return total * Rational(dimension(shape)) / Rational::factorial(n);
}

GroupAlgebraElement<Rational> y_coefficients(const YoungDiagram& shape) {
    Rational scale = Rational(dimension(shape)) / Rational::factorial(shape.size());
    return symmetrizers(shape).Phi * scale;
}

long semistandard_count(const YoungDiagram& shape, int N) {
    if (shape.rows() > N) return 0;
    // s_lambda(1^N) = prod over boxes (N + col - row) / hook.
    std::vector<int> cols = shape.conjugate();
    Rational r(1);
    for (int row = 0; row < shape.rows(); ++row)
        for (int col = 0; col < shape.parts()[row]; ++col) {
            long hook = (shape.parts()[row] - col) + (cols[col] - row) - 1;
            r = r * Rational(N + col - row, hook);
        }
    if (!r.is_integer()) throw std::logic_error("semistandard_count: non-integer result");
    return static_cast<long>(r.numerator().get_si());
}

}  // namespace capelli
