#include "opid/classify.hpp"

#include <stdexcept>

namespace opid {

namespace {

PublishedClassification make21() {
  PublishedClassification t;
  t.p = 2;
  t.q = 1;
  t.max_rank = 17;
  t.entries = {
      {"a=1,b=0,c=0", "", {}, 14, "", "L(xy) = 0"},
      {"a=1,b=0,c=-1", "", {}, 14, "", "L(xy) = xL(y)"},
      {"a=1,b=-1,c=0", "", {}, 14, "", "L(xy) = L(x)y"},
      {"a=1,b=-1,c=-1", "", {}, 14, "Derivation", "L(xy) = L(x)y + xL(y)"},
      {"a=0,b=1,c=0", "", {}, 14, "", "L(x)y = 0"},
      {"a=0,b=0,c=1", "", {}, 14, "", "xL(y) = 0"},
  };
  t.zero_sets = {
      {"case1_ib1", 1, 1,
       {"a=1,b=0,c=0", "a=1,b=0,c=-1", "a=1,b=-1,c=0", "a=1,b=-1,c=-1"}},
  };
  return t;
}

PublishedClassification make22() {
  PublishedClassification t;
  t.p = 2;
  t.q = 2;
  t.max_rank = 20;
  t.entries = {
      {"a=1,b=0,c=-1,d=0,e=0,f=-1", "", {}, 16, "", "L2(xy) = L2(x)y + xL2(y)"},
      {"a=1,b=0,c=-1,d=0,e=0,f=0", "", {}, 16, "", "L2(xy) = L2(x)y"},
      {"a=1,b=0,c=0,d=0,e=0,f=-1", "", {}, 16, "", "L2(xy) = xL2(y)"},
      {"a=1,b=0,c=0,d=0,e=0,f=0", "", {}, 16, "", "L2(xy) = 0"},
      {"a=0,b=0,c=1,d=0,e=0,f=0", "", {}, 16, "", "L2(x)y = 0"},
      {"a=0,b=0,c=0,d=0,e=0,f=1", "", {}, 16, "", "xL2(y) = 0"},
      {"a=1,b=0,c=0,d=1,e=0,f=1", "", {}, 19, "New identity A (right)",
       "L2(xy) + L(xL(y)) + xL2(y) = 0"},
      {"a=1,b=0,c=0,d=d,e=0,f=-d-1", "d", {0}, 19, "New identity B (right)",
       "L2(xy) + d L(xL(y)) = (d + 1) xL2(y)"},
      {"a=1,b=1,c=1,d=0,e=0,f=0", "", {}, 19, "New identity A (left)",
       "L2(xy) + L(L(x)y) + L2(x)y = 0"},
      {"a=1,b=b,c=-b-1,d=0,e=0,f=0", "b", {0}, 19, "New identity B (left)",
       "L2(xy) + b L(L(x)y) = (b + 1) L2(x)y"},
      {"a=1,b=-2,c=1,d=-2,e=2,f=1", "", {}, 19, "New identity C",
       "L2(xy) + L2(x)y + 2 L(x)L(y) + xL2(y) = 2 L(L(x)y) + 2 L(xL(y))"},
      {"a=1,b=-1,c=0,d=-1,e=1,f=0", "", {}, 19, "Nijenhuis",
       "L2(xy) + L(x)L(y) = L(L(x)y) + L(xL(y))"},
      {"a=0,b=1,c=-1,d=0,e=0,f=0", "", {}, 19, "P1", "L(L(x)y) = L2(x)y"},
      {"a=0,b=1,c=0,d=0,e=-1,f=0", "", {}, 19, "Left average",
       "L(L(x)y) = L(x)L(y)"},
      {"a=0,b=1,c=0,d=0,e=0,f=0", "", {}, 19, "P2", "L(L(x)y) = 0"},
      {"a=0,b=1,c=0,d=1,e=-1,f=0", "", {}, 19, "Rota-Baxter",
       "L(L(x)y) + L(xL(y)) = L(x)L(y)"},
      {"a=0,b=0,c=0,d=1,e=-1,f=0", "", {}, 19, "Right average",
       "L(xL(y)) = L(x)L(y)"},
      {"a=0,b=0,c=0,d=1,e=0,f=-1", "", {}, 19, "P3", "L(xL(y)) = xL2(y)"},
      {"a=0,b=0,c=0,d=1,e=0,f=0", "", {}, 19, "P4", "L(xL(y)) = 0"},
      {"a=0,b=0,c=0,d=0,e=1,f=0", "", {}, 19, "P5", "L(x)L(y) = 0"},
  };
  t.zero_sets = {
      {"case1_ib1", 1, 1,
       {"a=1,b=0,c=-1,d=0,e=0,f=-1", "a=1,b=0,c=-1,d=0,e=0,f=0",
        "a=1,b=0,c=0,d=0,e=0,f=-1", "a=1,b=0,c=0,d=0,e=0,f=0"}},
      {"case1_b0", 1, 4,
       {"a=1,b=0,c=-1,d=0,e=0,f=-1", "a=1,b=0,c=-1,d=0,e=0,f=0",
        "a=1,b=0,c=0,d=0,e=0,f=0", "a=1,b=0,c=0,d=1,e=0,f=1",
        "a=1,b=0,c=0,d=d,e=0,f=-d-1 | d"}},
      {"case1_e0", 1, 4,
       {"a=1,b=0,c=-1,d=0,e=0,f=-1", "a=1,b=0,c=0,d=0,e=0,f=0",
        "a=1,b=0,c=0,d=1,e=0,f=1", "a=1,b=0,c=0,d=-f-1,e=0,f=f | f",
        "a=1,b=1,c=1,d=0,e=0,f=0", "a=1,b=b,c=-b-1,d=0,e=0,f=0 | b"}},
      {"case1_db", 1, 4,
       {"a=1,b=-2,c=1,d=-2,e=2,f=1", "a=1,b=-1,c=0,d=-1,e=1,f=0",
        "a=1,b=0,c=-1,d=0,e=0,f=-1", "a=1,b=0,c=-1,d=0,e=0,f=0",
        "a=1,b=0,c=0,d=0,e=0,f=-1", "a=1,b=0,c=0,d=0,e=0,f=0"}},
      {"case2", 2, 1,
       {"a=0,b=1,c=-1,d=0,e=0,f=0", "a=0,b=1,c=0,d=0,e=-1,f=0",
        "a=0,b=1,c=0,d=0,e=0,f=0", "a=0,b=1,c=0,d=1,e=-1,f=0"}},
      {"case3", 3, 4, {"a=0,b=0,c=1,d=0,e=0,f=0"}},
      {"case4", 4, 1,
       {"a=0,b=0,c=0,d=1,e=-1,f=0", "a=0,b=0,c=0,d=1,e=0,f=-1",
        "a=0,b=0,c=0,d=1,e=0,f=0"}},
  };
  t.bases = {
      {"case1_ib1", 1, 1, {"b", "c", "d", "e", "f"},
       {"b", "d", "e", "c*(c+1)", "f*(f+1)"}},
      // Reduced under a graded reverse lexicographic order, so only the
      // ideal is comparable.
      {"case1_ib4", 1, 4, {"b", "c", "d", "e", "f"}, {
      "b*e^2*(d-b)",
      "b*e^2*(b+e)",
      "e^2*(d-b)*(d+b)",
      "e^2*(b^2+d*e)",
      "e^2*(e-b)*(e+b)",
      "b^3*(2*b*d+b*e+c*d-e)",
      "-b^3*(2*b*d+b*e-c*e-e)",
      "b^2*(2*b^2*f+2*b*d^2-d*e+e^2)",
      "-b^2*(b^2*f-b*d*e+e^2)",
      "b^3*f*(d-b)",
      "b^2*(b^2*f+b*e^2+e^2)",
      "b^3*f*(b+e)",
      "b^2*(2*b^2*f+2*b*f^2+2*b*f-d*e-e^2)",
      "-b^2*(3*b^2*d+2*b^2*e-c^2*d-b*e-c*d)",
      "b^2*(2*b^2*d+b^2*e+c^2*e-b*e+c*e)",
      "b^2*(c*d^2-b^2*f)",
      "b^2*(b^2*f+c*d*e)",
      "b^2*(c*e^2-b^2*f)",
      "b*(2*b^3*f+2*b*d^3+b*e^2-d^2*e)",
      "-b^2*(b^2*f-d^2*e+e^2)",
      "-f*b^2*(b-d)*(b+d)",
      "f*b^2*(b^2+d*e)",
      "b*(2*b^3*f+2*b*d*f^2+2*b*d*f-b*e^2-d^2*e)",
      "f*b^2*(e-b)*(e+b)",
      "-f*b^2*(b^2-e*f-e)",
      "b*(2*b^3*f+2*c^2*d^2-b*d*e-b*e^2+2*c*d^2)",
      "-b*(b^3*f-c^2*d*e-c*d*e)",
      "b*(b^3*f+c^2*e^2+c*e^2)",
      "b*(c*d^3-b^3*f)",
      "b*(b^3*f+c*d^2*e)",
      "-b*(b^3*f-d^3*e+b*e^2)",
      "f*b*(b^3+d^2*e)",
      "d^2*(b*d^2+2*b*d*f+b*f^2+b*f-d*e)",
      "-f*b*(b^3-d*e*f-d*e)",
      "f*b*(b^3+e^2*f+e^2)",
      "2*b^4*f+2*c^2*d^3-b^2*e^2-b*d^2*e+2*c*d^3",
      "-b^4*f+c^2*d^2*e+c*d^2*e",
      "b^4*f+c^2*d*e^2+c*d*e^2",
      "-b^4*f+c^2*e^3+c*e^3",
      "-b^4*f+c*d^4",
      "b^4*f+c*d^3*e",
      "d^3*(2*b*d+b*f+d*e-e)",
      "d^3*f*(b+e)",
      "-f*d^2*(b*d-e*f-e)",
      "f*(b^4+d*e^2*f+d*e^2)",
      "-f*(b^4-e^3*f-e^3)",
      "b^3*(b+c+1)*(b^2-c)",
      "b^3*(b^2*d+4*b*d+b*e-2*e)",
      "b^3*(b^2*e-4*b*d-b*e+2*e)",
      "b^4*f*(b+2)",
      "b^4*f*(c-1)",
      "b^3*(b+c+1)*(b^2-b*c+c^2-c)",
      "b^3*f*(c^2+b+c)",
      "b^2*(b+c+1)*(-c+b)*(b^2-c^2-c)",
      "f*b^2*(c^2*f-b^2+c^2+c*f+c)",
      "f*b^2*(f^3-b^2+2*f^2+f)",
      "b*(c^4*d+2*b^3*d+b^3*e+2*c^3*d-b^2*e+c^2*d)",
      "b*(c^4*e-2*b^3*d-b^3*e+2*c^3*e+b^2*e+c^2*e)",
      "f*b*(c^2*d*f-b^3+c^2*d+c*d*f+c*d)",
      "f*b*(c^2*e*f+b^3+c^2*e+c*e*f+c*e)",
      "d^3*(b*d^2+2*b*d-b*f-e)",
      "b*d^3*f*(d+2)",
      "b*d*f*(f^3-d^2+2*f^2+f)",
      "f*b*(e*f^3+b^3+2*e*f^2+e*f)",
      "c^4*d^2-b^4*f+2*c^3*d^2+c^2*d^2",
      "c^4*d*e+b^4*f+2*c^3*d*e+c^2*d*e",
      "c^4*e^2-b^4*f+2*c^3*e^2+c^2*e^2",
      "f*(c^2*d^2*f-b^4+c^2*d^2+c*d^2*f+c*d^2)",
      "f*(c^2*d*e*f+b^4+c^2*d*e+c*d*e*f+c*d*e)",
      "f*(c^2*e^2*f-b^4+c^2*e^2+c*e^2*f+c*e^2)",
      "f*(c*d^3*f+b^4+c*d^3)",
      "d^3*(d+f+1)*(d^2-f)",
      "d^3*(d+f+1)*(d^2-d*f+f^2-f)",
      "d^2*(d+f+1)*(-f+d)*(d^2-f^2-f)",
      "f*d*(e*f^3+b*d^2+2*e*f^2+e*f)",
      "f*(e^2*f^3-b^4+2*e^2*f^2+e^2*f)",
      "b*(b-c)*(b+c+1)*(b^4+b^2*c^2+c^4-b^3+b^2*c+b*c^2+2*c^3+b*c+c^2)",
      "f*b*(c^4*f+c^4+2*c^3*f+b^3+2*c^3+c^2*f+c^2)",
      "f*b*(c^2*f^3+2*c^2*f^2+c*f^3+b^3+c^2*f+2*c*f^2+c*f)",
      "f*b*(f^5+3*f^4+d^3+3*f^3+f^2)",
      "c^6*d+3*c^5*d-2*b^4*d-b^4*e+3*c^4*d+b^3*e+c^3*d",
      "c^6*e+3*c^5*e+2*b^4*d+b^4*e+3*c^4*e-b^3*e+c^3*e",
      "f*(c^4*d*f+c^4*d+2*c^3*d*f+b^4+2*c^3*d+c^2*d*f+c^2*d)",
      "f*(c^4*e*f+c^4*e+2*c^3*e*f-b^4+2*c^3*e+c^2*e*f+c^2*e)",
      "f*(c^2*d*f^3+2*c^2*d*f^2+c*d*f^3+b^4+c^2*d*f+2*c*d*f^2+c*d*f)",
      "f*(c^2*e*f^3+2*c^2*e*f^2+c*e*f^3-b^4+c^2*e*f+2*c*e*f^2+c*e*f)",
      "d*(f+d+1)*(f-d)*(d^4+d^2*f^2+f^4-d^3+d^2*f+d*f^2+2*f^3+d*f+f^2)",
      "f*(e*f^5+3*e*f^4-b*d^3+3*e*f^3+e*f^2)",
      "(c+b+1)*(c-b)*(b^6+b^4*c^2+b^2*c^4+c^6+3*b^5+b^4*c+2*b^3*c^2+2*b^2*c^3+b*c^4+3*c^5-b^4+2*b^3*c+2*b^2*c^2+2*b*c^3+3*c^4+b^2*c+b*c^2+c^3)",
      "f*(c^6*f+c^6+3*c^5*f+3*c^5+3*c^4*f-b^4+3*c^4+c^3*f+c^3)",
      "f*(c^4*f^3+2*c^4*f^2+2*c^3*f^3+c^4*f+4*c^3*f^2+c^2*f^3-b^4+2*c^3*f+2*c^2*f^2+c^2*f)",
      "f*(c^2*f^5+3*c^2*f^4+c*f^5+3*c^2*f^3+3*c*f^4-b^4+c^2*f^2+3*c*f^3+c*f^2)",
      "(f-d)*(f+d+1)*(d^6+d^4*f^2+d^2*f^4+f^6+3*d^5+d^4*f+2*d^3*f^2+2*d^2*f^3+d*f^4+3*f^5-d^4+2*d^3*f+2*d^2*f^2+2*d*f^3+3*f^4+d^2*f+d*f^2+f^3)",
      }},
      {"case2", 2, 1, {"c", "d", "e", "f"},
       {"f", "c*(d+e)", "d*(d+e)", "c^2*(c+1)", "d*c*(c+1)", "d^2*c",
        "d^2*(d-1)", "e^2*(e+1)"}},
      {"case3_ib1", 3, 1, {"d", "e", "f"}, {"d", "e", "f"}},
      {"case3_ib2", 3, 2, {"d", "e", "f"},
       {"d^2", "e*d", "f*d", "e^2", "f*e", "f^2"}},
      {"case3_ib3", 3, 3, {"d", "e", "f"},
       {"d^3", "e*d^2", "f*d^2", "d*e^2", "f*e*d", "d*f^2", "e^3", "e^2*f",
        "f^2*e", "f^3"}},
      {"case4", 4, 1, {"e", "f"}, {"f*e", "e^2*(e+1)", "f^2*(f+1)"}},
  };
  t.basis_sizes = {{1, 5}, {2, 15}, {3, 35}, {4, 93}};
  return t;
}

}  // namespace

const PublishedClassification& published_classification(unsigned p, unsigned q) {
  static const PublishedClassification t21 = make21();
  static const PublishedClassification t22 = make22();
  if (p == 2 && q == 1) return t21;
  if (p == 2 && q == 2) return t22;
  throw std::invalid_argument("no published classification for degree " +
                              std::to_string(p) + ", multiplicity " +
                              std::to_string(q));
}

}  // namespace opid
