#pragma once

// Umbrella header.

#include "uqsl2/canonical.hpp"
#include "uqsl2/endospace.hpp"
#include "uqsl2/errors.hpp"
#include "uqsl2/ids.hpp"
#include "uqsl2/io.hpp"
#include "uqsl2/laurent.hpp"
#include "uqsl2/matrix.hpp"
#include "uqsl2/module_model.hpp"
#include "uqsl2/qcontext.hpp"
#include "uqsl2/rational.hpp"
#include "uqsl2/recognize.hpp"
#include "uqsl2/rep.hpp"
#include "uqsl2/report.hpp"
#include "uqsl2/ring_scalar.hpp"
#include "uqsl2/scalar_text.hpp"
#include "uqsl2/subspace.hpp"
#include "uqsl2/transitions.hpp"
#include "uqsl2/verify.hpp"
