#include "verlie/registry.hpp"

#include <stdexcept>

namespace verlie {

namespace {

// Shorthand used by the row builders below.
//
// Basis conventions per table family (L basis w_*, V basis v_*):
//   P        (m=0,n=1): L = (y'),            V = (y)
//   1+P      (m=1,n=1): L = (x, y'),         V = (y)
//   2x1+P    (m=2,n=1): L = (x, y, v'),      V = (v)
//   2P       (m=0,n=2): L = (w0, w1),        V = (x, y); by default x'=w0, y'=w1
// The default d-inclusion maps v_j to w_{m+j}; rows with a parametrized
// differential override d_incl explicitly.

Vec lv(std::initializer_list<int> xs) {
    Vec v;
    for (int x : xs) v.push_back(static_cast<FieldElem>(x));
    return v;
}

void lset(FrameworkTuple& t, int i, int j, const Vec& val) {
    int l = t.ldim();
    for (int k = 0; k < l; ++k) {
        t.l_c[(static_cast<size_t>(i) * l + j) * l + k] = val[k];
        t.l_c[(static_cast<size_t>(j) * l + i) * l + k] = val[k];
    }
}

void fset(FrameworkTuple& t, int k, int i, int j, FieldElem c) { t.f_act[k](i, j) = c; }

void aset(FrameworkTuple& t, int k, int j, const Vec& val) {
    for (int i = 0; i < t.ldim(); ++i) t.a_act[k](i, j) = val[i];
}

void bset(FrameworkTuple& t, int i, int j, const Vec& val) {
    t.b_map[static_cast<size_t>(i) * t.n + j] = val;
    t.b_map[static_cast<size_t>(j) * t.n + i] = val;
}

void cset(FrameworkTuple& t, int i, int j, const Vec& val) {
    t.c_upper[static_cast<size_t>(i) * t.n + j] = val;
}

using B = ParamBinding;

FieldElem gp(const B& b, const std::string& k) { return b.at(k); }

std::vector<RegistryRow> build_registry() {
    std::vector<RegistryRow> rows;

    auto add = [&](RegistryRow r) { rows.push_back(std::move(r)); };

    // ---------------- P ----------------
    add({"P", "a", 0, 1, {}, nullptr,
         [](const B&, const Field& f) { return empty_tuple(0, 1, f); },
         "abelian"});
    add({"P", "s", 0, 1, {}, nullptr,
         [](const B&, const Field& f) {
             FrameworkTuple t = empty_tuple(0, 1, f);
             aset(t, 0, 0, lv({1}));           // [y, y'] = y'
             return t;
         },
         "ad y semisimple"});
    add({"P", "n", 0, 1, {}, nullptr,
         [](const B&, const Field& f) {
             FrameworkTuple t = empty_tuple(0, 1, f);
             cset(t, 0, 0, lv({1}));           // [y, y] = y'
             return t;
         },
         "ad y nilpotent"});

    // ---------------- 1+P, rows 1..13 ----------------
    // L basis (x, y'); columns: [x,y'] in L, [y,y]=C, [y',y] and [x,y] via f/A.
    auto add1p = [&](const std::string& row, std::vector<ParamSpec> ps,
                     std::function<void(FrameworkTuple&, const B&, const Field&)> fill,
                     std::string note = "") {
        add({"1+P", row, 1, 1, std::move(ps), nullptr,
             [fill](const B& b, const Field& f) {
                 FrameworkTuple t = empty_tuple(1, 1, f);
                 fill(t, b, f);
                 return t;
             },
             std::move(note)});
    };
    add1p("1", {}, [](FrameworkTuple&, const B&, const Field&) {});
    add1p("2", {{"lambda"}}, [](FrameworkTuple& t, const B& b, const Field&) {
        lset(t, 0, 1, lv({0, 1}));                       // [x, y'] = y'
        fset(t, 0, 0, 0, 1);                             // [y, x] = y + ...
        aset(t, 0, 0, {0, gp(b, "lambda")});             // ... + lambda y'
    });
    add1p("3", {{"lambda"}}, [](FrameworkTuple& t, const B& b, const Field&) {
        cset(t, 0, 0, lv({0, 1}));                       // [y, y] = y'
        aset(t, 0, 0, {gp(b, "lambda"), 0});             // [x, y] = lambda x
    });
    add1p("4", {}, [](FrameworkTuple& t, const B&, const Field&) {
        cset(t, 0, 0, lv({0, 1}));
        aset(t, 0, 0, lv({0, 1}));                       // [x, y] = y'
    });
    add1p("5", {{"lambda"}}, [](FrameworkTuple& t, const B& b, const Field&) {
        cset(t, 0, 0, lv({1, 0}));                       // [y, y] = x
        aset(t, 1, 0, {gp(b, "lambda"), 0});             // [y', y] = lambda x
    });
    add1p("6", {{"lambda"}}, [](FrameworkTuple& t, const B& b, const Field&) {
        cset(t, 0, 0, lv({1, 0}));
        aset(t, 1, 0, {gp(b, "lambda"), 1});             // [y', y] = lambda x + y'
    });
    add1p("7", {}, [](FrameworkTuple& t, const B&, const Field&) {
        aset(t, 0, 0, lv({1, 0}));                       // [x, y] = x
    });
    add1p("8", {}, [](FrameworkTuple& t, const B&, const Field&) {
        aset(t, 0, 0, lv({0, 1}));                       // [x, y] = y'
    });
    add1p("9", {}, [](FrameworkTuple& t, const B&, const Field&) {
        aset(t, 1, 0, lv({0, 1}));                       // [y', y] = y'
        aset(t, 0, 0, lv({1, 1}));                       // [x, y] = x + y'
    });
    add1p("10", {{"lambda"}}, [](FrameworkTuple& t, const B& b, const Field&) {
        aset(t, 1, 0, lv({0, 1}));
        aset(t, 0, 0, {gp(b, "lambda"), 0});
    });
    add1p("11", {{"lambda"}}, [](FrameworkTuple& t, const B& b, const Field&) {
        aset(t, 1, 0, lv({1, 0}));                       // [y', y] = x
        aset(t, 0, 0, {1, gp(b, "lambda")});             // [x, y] = x + lambda y'
    });
    add1p("12", {}, [](FrameworkTuple& t, const B&, const Field&) {
        aset(t, 1, 0, lv({1, 0}));
        aset(t, 0, 0, lv({0, 1}));
    });
    add1p("13", {}, [](FrameworkTuple& t, const B&, const Field&) {
        aset(t, 1, 0, lv({1, 0}));
    });

    // ---------------- 2x1+P ----------------
    // L basis (x, y, v'); columns [v,v]=C, [v,v']=A(w2), [v,x]=A(w0), [v,y]=A(w1).
    enum class LKind { Heis, Solv, Abelian };
    auto add21 = [&](const std::string& table, LKind lk, const std::string& row,
                     std::vector<ParamSpec> ps,
                     std::function<bool(const B&, const Field&)> joint,
                     std::function<void(FrameworkTuple&, const B&, const Field&)> fill,
                     std::string note = "") {
        add({table, row, 2, 1, std::move(ps), std::move(joint),
             [fill, lk](const B& b, const Field& f) {
                 FrameworkTuple t = empty_tuple(2, 1, f);
                 if (lk == LKind::Heis) lset(t, 0, 1, lv({0, 0, 1}));   // [x,y] = v'
                 if (lk == LKind::Solv) lset(t, 0, 1, lv({1, 0, 0}));   // [x,y] = x
                 fill(t, b, f);
                 return t;
             },
             std::move(note)});
    };
    auto any1 = std::vector<ParamSpec>{{"lambda"}};
    auto any2 = std::vector<ParamSpec>{{"lambda"}, {"mu"}};

    add21("2x1+P-z", LKind::Heis, "1.1", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 1, 0, {gp(b, "lambda"), 0, 0});
          });
    add21("2x1+P-z", LKind::Heis, "1.2", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, {gp(b, "lambda"), 1, 0});
          });
    add21("2x1+P-z", LKind::Heis, "1.3", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field& f) {
              aset(t, 2, 0, lv({0, 0, 1}));
              aset(t, 0, 0, {gp(b, "lambda"), 0, 0});
              aset(t, 1, 0, {0, f.add(gp(b, "lambda"), 1), 0});
          });
    add21("2x1+P-z", LKind::Heis, "1.4", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({0, 0, 1}));
              aset(t, 1, 0, {gp(b, "lambda"), 0, 0});
          });
    add21("2x1+P-z", LKind::Heis, "1.5", any2, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, {0, 0, gp(b, "lambda")});
              aset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, {gp(b, "mu"), 1, 0});
          });

    add21("2x1+P-x", LKind::Solv, "2.1", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) { aset(t, 1, 0, lv({0, 0, 1})); });
    add21("2x1+P-x", LKind::Solv, "2.2", {}, nullptr,
          [](FrameworkTuple&, const B&, const Field&) {});
    add21("2x1+P-x", LKind::Solv, "2.3", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) { aset(t, 0, 0, lv({1, 0, 0})); },
          "printed A-eigenvector violates the derivation constraint; eigenvalue moved to x");
    add21("2x1+P-x", LKind::Solv, "2.4", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 2, 0, lv({0, 0, 1}));
              aset(t, 1, 0, {0, 0, gp(b, "lambda")});
          });
    add21("2x1+P-x", LKind::Solv, "2.5", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 2, 0, lv({0, 0, 1}));
              aset(t, 0, 0, {gp(b, "lambda"), 0, 0});
          },
          "printed A-eigenvector violates the derivation constraint; eigenvalue moved to x");
    add21("2x1+P-x", LKind::Solv, "2.6", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, {0, 0, gp(b, "lambda")});
              aset(t, 1, 0, lv({0, 0, 1}));
          });
    add21("2x1+P-x", LKind::Solv, "2.7", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) { cset(t, 0, 0, lv({0, 0, 1})); });
    add21("2x1+P-x", LKind::Solv, "2.8", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, {0, 0, gp(b, "lambda")});
              aset(t, 0, 0, lv({1, 0, 0}));
          },
          "printed A-eigenvector violates the derivation constraint; eigenvalue moved to x");

    // abelian L, [v,v] = 0 (rows 3.x)
    add21("2x1+P-ab", LKind::Abelian, "3.1", {}, nullptr,
          [](FrameworkTuple&, const B&, const Field&) {});
    add21("2x1+P-ab", LKind::Abelian, "3.2", any2,
          [](const B& b, const Field&) { return gp(b, "lambda") != gp(b, "mu"); },
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 2, 0, lv({1, 1, 1}));
              aset(t, 0, 0, {gp(b, "lambda"), 0, 0});
              aset(t, 1, 0, {0, gp(b, "mu"), 0});
          },
          "footnote: redundant when lambda = mu");
    add21("2x1+P-ab", LKind::Abelian, "3.3", any2,
          [](const B& b, const Field&) {
              return !(gp(b, "lambda") == 1 && gp(b, "mu") == 1);
          },
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 2, 0, lv({0, 1, 1}));
              aset(t, 0, 0, {gp(b, "lambda"), 0, 0});
              aset(t, 1, 0, {0, gp(b, "mu"), 0});
          },
          "footnote: redundant when lambda = mu = 1");
    add21("2x1+P-ab", LKind::Abelian, "3.4", any2, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 2, 0, lv({0, 0, 1}));
              aset(t, 0, 0, {gp(b, "lambda"), 0, 0});
              aset(t, 1, 0, {0, gp(b, "mu"), 0});
          });
    add21("2x1+P-ab", LKind::Abelian, "3.5", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, {0, gp(b, "lambda"), 0});
          });
    add21("2x1+P-ab", LKind::Abelian, "3.6", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 2, 0, {1, gp(b, "lambda"), 1});
              aset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, lv({1, 1, 0}));
          });
    add21("2x1+P-ab", LKind::Abelian, "3.7", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 2, 0, lv({1, 0, 1}));
              aset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, {gp(b, "lambda"), 1, 1});
          });
    add21("2x1+P-ab", LKind::Abelian, "3.8", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              aset(t, 2, 0, lv({0, 0, 1}));
              aset(t, 0, 0, lv({1, 0, 1}));
              aset(t, 1, 0, lv({1, 1, 0}));
          });
    add21("2x1+P-ab", LKind::Abelian, "3.9", {{"alpha"}}, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 2, 0, {gp(b, "alpha"), 1, 0});
              aset(t, 1, 0, lv({1, 0, 0}));
          });
    add21("2x1+P-ab", LKind::Abelian, "3.10", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              aset(t, 2, 0, lv({1, 0, 0}));
              aset(t, 1, 0, lv({0, 0, 1}));
          });
    add21("2x1+P-ab", LKind::Abelian, "3.11", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              aset(t, 0, 0, lv({0, 0, 1}));
              aset(t, 1, 0, lv({1, 0, 0}));
          });
    add21("2x1+P-ab", LKind::Abelian, "3.12", any1,
          [](const B& b, const Field&) { return gp(b, "lambda") != 1; },
          [](FrameworkTuple& t, const B& b, const Field& f) {
              FieldElem l1 = f.add(gp(b, "lambda"), 1);
              aset(t, 2, 0, {l1, l1, gp(b, "lambda")});
              aset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, lv({1, 1, 0}));
          },
          "footnote: lambda = 1 collapses to rows 13-15");
    add21("2x1+P-ab", LKind::Abelian, "3.13", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field& f) {
              aset(t, 2, 0, {f.add(gp(b, "lambda"), 1), 0, 1});
              aset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, lv({1, 1, 0}));
          });
    add21("2x1+P-ab", LKind::Abelian, "3.14", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 2, 0, lv({1, 0, 1}));
              aset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, {0, gp(b, "lambda"), 0});
          });
    add21("2x1+P-ab", LKind::Abelian, "3.15", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              aset(t, 2, 0, lv({0, 0, 1}));
              aset(t, 0, 0, lv({1, 0, 1}));
              aset(t, 1, 0, {0, gp(b, "lambda"), 0});
          });
    add21("2x1+P-ab", LKind::Abelian, "3.16", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              aset(t, 2, 0, lv({1, 1, 1}));
              aset(t, 1, 0, lv({1, 0, 0}));
          });
    add21("2x1+P-ab", LKind::Abelian, "3.17", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              aset(t, 2, 0, lv({1, 0, 1}));
              aset(t, 1, 0, lv({1, 0, 0}));
          });
    add21("2x1+P-ab", LKind::Abelian, "3.18", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              aset(t, 2, 0, lv({1, 0, 0}));
              aset(t, 1, 0, lv({0, 1, 0}));
          });
    add21("2x1+P-ab", LKind::Abelian, "3.19", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              aset(t, 0, 0, lv({0, 0, 1}));
              aset(t, 1, 0, lv({0, 1, 0}));
          });
    add21("2x1+P-ab", LKind::Abelian, "3.20", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) { aset(t, 2, 0, lv({1, 0, 0})); });
    add21("2x1+P-ab", LKind::Abelian, "3.21", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) { aset(t, 1, 0, lv({1, 0, 0})); });
    add21("2x1+P-ab", LKind::Abelian, "3.22", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) { aset(t, 0, 0, lv({0, 0, 1})); });

    // abelian L, [v,v] != 0 (rows 4.x)
    add21("2x1+P-ab-b", LKind::Abelian, "4.1", {{"mu"}}, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, {0, gp(b, "mu"), 0});
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.2", any2, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({0, 0, 1}));
              aset(t, 0, 0, {gp(b, "lambda"), 0, 0});
              aset(t, 1, 0, {0, gp(b, "mu"), 0});
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.3", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, lv({0, 1, 0}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.4", {{"alpha"}, {"lambda"}}, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 2, 0, {gp(b, "alpha"), 1, 1});
              aset(t, 1, 0, {0, gp(b, "lambda"), 0});
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.5", {{"alpha"}, {"lambda"}}, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 2, 0, {gp(b, "alpha"), 0, 1});
              aset(t, 1, 0, {0, gp(b, "lambda"), 0});
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.6", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              cset(t, 0, 0, lv({0, 0, 1}));
              aset(t, 0, 0, lv({0, 0, 1}));
              aset(t, 1, 0, lv({1, 0, 0}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.7", {{"alpha"}, {"lambda"}}, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 2, 0, {gp(b, "alpha"), 1, 0});
              aset(t, 1, 0, {gp(b, "lambda"), 0, 0});
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.8", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 2, 0, {gp(b, "lambda"), 0, 0});
              aset(t, 1, 0, lv({0, 0, 1}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.9", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 2, 0, lv({0, 1, 0}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.10", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, lv({0, 0, 1}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.11", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              cset(t, 0, 0, lv({0, 0, 1}));
              aset(t, 1, 0, lv({1, 0, 0}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.12", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              cset(t, 0, 0, lv({0, 0, 1}));
              aset(t, 0, 0, lv({0, 0, 1}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.13", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 2, 0, lv({1, 0, 0}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.14", {}, nullptr,
          [](FrameworkTuple& t, const B&, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, lv({1, 0, 0}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.15", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({0, 0, 1}));
              aset(t, 0, 0, {gp(b, "lambda"), 0, 0});
              aset(t, 1, 0, {gp(b, "lambda"), gp(b, "lambda"), 0});
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.16", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 2, 0, {gp(b, "lambda"), 1, 1});
              aset(t, 1, 0, lv({0, 1, 0}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.17", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 2, 0, {gp(b, "lambda"), 0, 1});
              aset(t, 1, 0, lv({0, 1, 1}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.18", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({0, 0, 1}));
              aset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 1, 0, {0, gp(b, "lambda"), 0});
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.19", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 2, 0, {gp(b, "lambda"), gp(b, "lambda"), 1});
              aset(t, 1, 0, lv({1, 0, 0}));
          });
    add21("2x1+P-ab-b", LKind::Abelian, "4.20", any1, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({1, 0, 0}));
              aset(t, 2, 0, {gp(b, "lambda"), 0, 0});
              aset(t, 1, 0, lv({0, 1, 0}));
          });

    // f != 0 (rows 5.x): L has [x, v'] = v' and possibly [x, y] != 0;
    // f(x) acts by 1 on V.
    auto add5 = [&](const std::string& row, std::vector<ParamSpec> ps, const Vec& xy_bracket,
                    std::function<void(FrameworkTuple&, const B&, const Field&)> fill) {
        add({"2x1+P-f", row, 2, 1, std::move(ps), nullptr,
             [fill, xy_bracket](const B& b, const Field& f) {
                 FrameworkTuple t = empty_tuple(2, 1, f);
                 lset(t, 0, 2, lv({0, 0, 1}));     // [x, v'] = v'
                 lset(t, 0, 1, xy_bracket);
                 fset(t, 0, 0, 0, 1);              // f(x) = 1 on V
                 fill(t, b, f);
                 return t;
             },
             ""});
    };
    auto xy = [&](int a, int b, int c) { return lv({a, b, c}); };
    add5("5.1", {}, xy(0, 0, 0), [](FrameworkTuple& t, const B&, const Field&) {
        cset(t, 0, 0, lv({0, 1, 0}));                 // [v,v] = y
        aset(t, 0, 0, lv({0, 1, 0}));                 // [v,x] = v + y
    });
    add5("5.2", any1, xy(0, 0, 0), [](FrameworkTuple& t, const B& b, const Field&) {
        cset(t, 0, 0, lv({0, 1, 0}));
        aset(t, 0, 0, {0, gp(b, "lambda"), 1});       // [v,x] = v + v' + lambda y
    });
    add5("5.3", {{"lambda"}, {"mu"}, {"nu"}}, xy(0, 0, 0),
         [](FrameworkTuple& t, const B& b, const Field&) {
             cset(t, 0, 0, lv({0, 1, 0}));
             aset(t, 2, 0, {1, gp(b, "lambda"), 0});  // [v,v'] = lambda y + x
             aset(t, 0, 0, {0, gp(b, "nu"), gp(b, "mu")});
             aset(t, 1, 0, lv({0, 0, 1}));            // [v,y] = v'
         });
    add5("5.4", {{"lambda"}, {"mu"}}, xy(0, 0, 0),
         [](FrameworkTuple& t, const B& b, const Field&) {
             lset(t, 0, 1, {0, gp(b, "lambda"), 0});  // [x,y] = lambda y
             aset(t, 0, 0, {0, gp(b, "mu"), 1});
         });
    add5("5.5", {{"lambda"}}, xy(0, 0, 0), [](FrameworkTuple& t, const B& b, const Field&) {
        lset(t, 0, 1, {0, gp(b, "lambda"), 0});
        aset(t, 0, 0, lv({0, 1, 0}));
    });
    add5("5.6", {{"mu"}, {"nu"}}, xy(0, 0, 0), [](FrameworkTuple& t, const B& b, const Field&) {
        aset(t, 0, 0, {0, gp(b, "nu"), gp(b, "mu")});
        aset(t, 1, 0, lv({0, 0, 1}));
    });
    add5("5.7", {{"lambda"}, {"mu"}, {"nu"}}, xy(0, 0, 0),
         [](FrameworkTuple& t, const B& b, const Field&) {
             aset(t, 2, 0, lv({0, 1, 0}));            // [v,v'] = y
             aset(t, 0, 0, {0, gp(b, "nu"), gp(b, "mu")});
             aset(t, 1, 0, {0, 0, gp(b, "lambda")});  // [v,y] = lambda v'
         });
    add5("5.8", {{"lambda"}}, xy(0, 1, 1), [](FrameworkTuple& t, const B& b, const Field&) {
        aset(t, 0, 0, {0, gp(b, "lambda"), 1});
    });
    add5("5.9", {}, xy(0, 1, 1), [](FrameworkTuple& t, const B&, const Field&) {
        aset(t, 0, 0, lv({0, 1, 0}));
    });

    // ---------------- 2P ----------------
    // L basis (w0, w1); V basis (x, y); default x' = w0, y' = w1.
    auto add2p = [&](const std::string& table, const std::string& row,
                     std::vector<ParamSpec> ps,
                     std::function<bool(const B&, const Field&)> joint,
                     std::function<void(FrameworkTuple&, const B&, const Field&)> fill,
                     std::string note = "") {
        add({table, row, 0, 2, std::move(ps), std::move(joint),
             [fill](const B& b, const Field& f) {
                 FrameworkTuple t = empty_tuple(0, 2, f);
                 fill(t, b, f);
                 return t;
             },
             std::move(note)});
    };

    // abelian L, abelian quotient: only C is nonzero
    add2p("2P-abelian", "1", {}, nullptr, [](FrameworkTuple&, const B&, const Field&) {});
    add2p("2P-abelian", "2", {}, nullptr, [](FrameworkTuple& t, const B&, const Field&) {
        cset(t, 0, 1, lv({1, 0}));                    // [x,y] = x'
    });
    add2p("2P-abelian", "3", {{"lambda", ParamDomain::NonZero}}, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({0, 1}));              // [x,x] = y'
              cset(t, 0, 1, {gp(b, "lambda"), 0});
          });
    add2p("2P-abelian", "4", {}, nullptr, [](FrameworkTuple& t, const B&, const Field&) {
        cset(t, 0, 0, lv({0, 1}));
        cset(t, 0, 1, lv({0, 1}));
    });
    add2p("2P-abelian", "5", {{"lambda"}}, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, {1, gp(b, "lambda")});    // [x,x] = x' + lambda y'
              cset(t, 0, 1, lv({1, 0}));
          });
    add2p("2P-abelian", "6", {{"lambda"}}, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({1, 0}));
              cset(t, 0, 1, {0, gp(b, "lambda")});
          });
    add2p("2P-abelian", "7", {{"lambda", ParamDomain::NonZero}, {"mu"}}, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({0, 1}));
              cset(t, 1, 1, {gp(b, "lambda"), 0});
              cset(t, 0, 1, {gp(b, "mu"), 0});
          });
    add2p("2P-abelian", "8", {{"lambda"}, {"mu"}}, nullptr,
          [](FrameworkTuple& t, const B& b, const Field&) {
              cset(t, 0, 0, lv({1, 0}));
              cset(t, 1, 1, lv({0, 1}));
              cset(t, 0, 1, {gp(b, "lambda"), gp(b, "mu")});
          });

    // abelian L, nonabelian quotient with bracket [x,y] = x; the action
    // matrices rho(x), rho(y) give A(w_k)v_j = rho(v_j) w_k.
    auto rho = [&](FrameworkTuple& t, const Mat& rx, const Mat& ry) {
        for (int k = 0; k < 2; ++k) {
            aset(t, k, 0, rx.col(k));
            aset(t, k, 1, ry.col(k));
        }
        bset(t, 0, 1, lv({1, 0}));                    // quotient bracket [x,y] = x
    };
    auto m22 = [](const Field& f, int a, int b, int c, int d) {
        Mat m(2, 2, f);
        m(0, 0) = static_cast<FieldElem>(a);
        m(0, 1) = static_cast<FieldElem>(b);
        m(1, 0) = static_cast<FieldElem>(c);
        m(1, 1) = static_cast<FieldElem>(d);
        return m;
    };

    add2p("2P-nonabelian-g0", "1", {{"alpha"}, {"lambda"}, {"mu"}},
          [](const B& b, const Field& f) {
              // d injective: det [[l, a*m], [m, (a+1)*l]] != 0
              FieldElem a = gp(b, "alpha"), l = gp(b, "lambda"), m = gp(b, "mu");
              FieldElem det = f.add(f.mul(f.add(a, 1), f.mul(l, l)), f.mul(a, f.mul(m, m)));
              return det != 0;
          },
          [m22, rho](FrameworkTuple& t, const B& b, const Field& f) {
              rho(t, m22(f, 0, 1, 1, 0), Mat(2, 2, f));
              t.a_act[0](0, 1) = gp(b, "alpha");                  // rho(y) = diag(alpha, alpha+1)
              t.a_act[1](1, 1) = f.add(gp(b, "alpha"), 1);
              t.d_incl = Mat(2, 2, f);
              t.d_incl(0, 0) = gp(b, "lambda");
              t.d_incl(1, 0) = gp(b, "mu");
              t.d_incl(0, 1) = f.mul(gp(b, "alpha"), gp(b, "mu"));
              t.d_incl(1, 1) = f.mul(f.add(gp(b, "alpha"), 1), gp(b, "lambda"));
          },
          "irreducible L; parametrized differential");
    add2p("2P-nonabelian-g0", "2", {{"alpha", ParamDomain::NonZero}, {"lambda"}}, nullptr,
          [m22, rho](FrameworkTuple& t, const B& b, const Field& f) {
              FieldElem a = gp(b, "alpha");
              rho(t, m22(f, 0, f.add(a, 1), 0, 0),
                  m22(f, a, gp(b, "lambda"), 0, f.add(a, 1)));
          },
          "action matrices taken from the proof text");
    add2p("2P-nonabelian-g0", "3",
          {{"omega"}, {"xi"}, {"nu"}, {"a"}, {"b"}, {"c"}},
          [](const B& bd, const Field& f) {
              FieldElem a = gp(bd, "a"), b = gp(bd, "b"), c = gp(bd, "c");
              return f.add(f.mul(a, a), f.mul(b, c)) != 0;
          },
          [m22, rho](FrameworkTuple& t, const B& b, const Field& f) {
              rho(t, m22(f, 0, 1, 0, 0), m22(f, 0, 0, 0, 1));
              cset(t, 0, 0, {gp(b, "omega"), 0});
              cset(t, 1, 1, {gp(b, "xi"), 0});
              cset(t, 0, 1, {0, gp(b, "nu")});
              t.d_incl = Mat(2, 2, f);
              t.d_incl(0, 0) = gp(b, "a");
              t.d_incl(1, 0) = gp(b, "b");
              t.d_incl(0, 1) = gp(b, "c");
              t.d_incl(1, 1) = gp(b, "a");
          },
          "contains gl(P) at omega=a=nu=1, xi=b=c=0");
    add2p("2P-nonabelian-g0", "4", {{"mu"}}, nullptr,
          [m22, rho](FrameworkTuple& t, const B& b, const Field& f) {
              rho(t, Mat(2, 2, f), m22(f, 1, 1, 0, 1));
              cset(t, 0, 1, {0, gp(b, "mu")});
          });
    add2p("2P-nonabelian-g0", "5", {{"mu"}}, nullptr,
          [m22, rho](FrameworkTuple& t, const B& b, const Field& f) {
              rho(t, Mat(2, 2, f), Mat::identity(2, f));
              cset(t, 0, 1, {0, gp(b, "mu")});
          });
    add2p("2P-nonabelian-g0", "6", {{"mu"}}, nullptr,
          [m22, rho](FrameworkTuple& t, const B& b, const Field& f) {
              rho(t, Mat(2, 2, f), Mat::identity(2, f));
              cset(t, 0, 1, {1, gp(b, "mu")});
          });
    add2p("2P-nonabelian-g0", "7", {{"lambda"}, {"mu"}}, nullptr,
          [m22, rho](FrameworkTuple& t, const B& b, const Field& f) {
              rho(t, Mat(2, 2, f), m22(f, 1, 0, 0, 0));
              cset(t, 0, 0, {0, gp(b, "lambda")});
              cset(t, 1, 1, {0, gp(b, "mu")});
          });
    add2p("2P-nonabelian-g0", "8", {{"lambda"}, {"mu"}}, nullptr,
          [m22, rho](FrameworkTuple& t, const B& b, const Field& f) {
              rho(t, Mat(2, 2, f), m22(f, 1, 0, 0, 0));
              cset(t, 0, 0, {0, gp(b, "lambda")});
              cset(t, 1, 1, {0, gp(b, "mu")});
              cset(t, 0, 1, lv({1, 0}));
          });
    add2p("2P-nonabelian-g0", "9", {{"lambda", ParamDomain::NotZeroOne}}, nullptr,
          [m22, rho](FrameworkTuple& t, const B& b, const Field& f) {
              rho(t, Mat(2, 2, f), m22(f, 1, 0, 0, gp(b, "lambda")));
          });
    add2p("2P-nonabelian-g0", "10", {{"lambda", ParamDomain::NotZeroOne}}, nullptr,
          [m22, rho](FrameworkTuple& t, const B& b, const Field& f) {
              rho(t, Mat(2, 2, f), m22(f, 1, 0, 0, gp(b, "lambda")));
              cset(t, 0, 1, lv({1, 0}));
          });

    // nonabelian L = ker d with [x', y'] = x'; two rows per the proof,
    // distinguished by the printed shared-column variants.
    auto addnl = [&](const std::string& row, FieldElem lam) {
        add2p("2P-nonabelian", row, {{"mu"}, {"nu"}}, nullptr,
              [lam](FrameworkTuple& t, const B& b, const Field&) {
                  lset(t, 0, 1, lv({1, 0}));          // [x', y'] = x'
                  fset(t, 0, 0, 1, 1);                // f(x')y = x
                  fset(t, 1, 0, 0, 1);                // f(y')x = x
                  aset(t, 0, 0, {lam, 0});            // A(x')x = lam x'
                  aset(t, 0, 1, {0, lam});            // A(x')y = lam y'
                  aset(t, 1, 0, {0, lam});            // A(y')x = lam y'
                  aset(t, 1, 1, {gp(b, "nu"), 0});    // A(y')y = nu x'
                  cset(t, 1, 1, lv({0, 1}));          // [y,y] = y'
                  cset(t, 0, 1, {gp(b, "mu"), 0});    // [x,y] = mu x'
              },
              "two printed rows share columns; split per the proof");
    };
    addnl("1", 1);
    addnl("2", 0);

    return rows;
}

}  // namespace

const std::vector<RegistryRow>& registry_rows() {
    static const std::vector<RegistryRow> rows = build_registry();
    return rows;
}

const RegistryRow& registry_find(const std::string& table, const std::string& row) {
    for (const auto& r : registry_rows())
        if (r.table == table && r.row == row) return r;
    throw std::invalid_argument("unknown registry row: " + table + "/" + row);
}

std::vector<ParamBinding> admissible_bindings(const RegistryRow& row, const Field& f) {
    std::vector<ParamBinding> out;
    std::vector<ParamBinding> partial = {ParamBinding{}};
    for (const auto& p : row.params) {
        std::vector<ParamBinding> next;
        for (const auto& base : partial)
            for (int v = 0; v < f.size(); ++v) {
                if (p.domain == ParamDomain::NonZero && v == 0) continue;
                if (p.domain == ParamDomain::NotZeroOne && (v == 0 || v == 1)) continue;
                ParamBinding b = base;
                b[p.name] = static_cast<FieldElem>(v);
                next.push_back(std::move(b));
            }
        partial = std::move(next);
    }
    for (auto& b : partial)
        if (!row.joint_constraint || row.joint_constraint(b, f)) out.push_back(std::move(b));
    return out;
}

AssembledStructure instantiate(const RegistryRow& row, const ParamBinding& b, const Field& f) {
    for (const auto& p : row.params) {
        auto it = b.find(p.name);
        if (it == b.end())
            throw std::invalid_argument("missing parameter " + p.name + " for " + row.id());
        if (p.domain == ParamDomain::NonZero && it->second == 0)
            throw std::invalid_argument("parameter " + p.name + " must be nonzero in " + row.id());
        if (p.domain == ParamDomain::NotZeroOne && (it->second == 0 || it->second == 1))
            throw std::invalid_argument("parameter " + p.name + " must avoid 0,1 in " + row.id());
        if (it->second >= f.size())
            throw std::invalid_argument("parameter " + p.name + " outside field");
    }
    for (const auto& [k, v] : b)
        if (std::none_of(row.params.begin(), row.params.end(),
                         [&](const ParamSpec& p) { return p.name == k; }))
            throw std::invalid_argument("unknown parameter " + k + " for " + row.id());
    if (row.joint_constraint && !row.joint_constraint(b, f))
        throw std::invalid_argument("parameters outside the row's domain: " + row.id());
    return assemble_from_tuple(row.build(b, f));
}

BracketStructure table_lookup(const std::string& table, const std::string& row,
                              const ParamBinding& b, const Field& f) {
    return instantiate(registry_find(table, row), b, f).structure;
}

std::string binding_to_string(const ParamBinding& b, const Field& f) {
    std::string s;
    for (const auto& [k, v] : b) {
        if (!s.empty()) s += ",";
        s += k + "=" + f.to_string(v);
    }
    return s.empty() ? "-" : s;
}

}  // namespace verlie
