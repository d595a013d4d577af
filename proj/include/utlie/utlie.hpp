// utlie.hpp -- umbrella include for the whole library.
#pragma once

#include "utlie/field.hpp"
#include "utlie/cpoly.hpp"
#include "utlie/linalg.hpp"
#include "utlie/variable.hpp"
#include "utlie/bracket.hpp"
#include "utlie/wqo.hpp"
#include "utlie/normal.hpp"
#include "utlie/genmat.hpp"
#include "utlie/derive.hpp"
#include "utlie/specht2.hpp"
#include "utlie/parse.hpp"
