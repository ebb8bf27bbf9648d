#pragma once

#include "bsn/nrational.hpp"
#include "bsn/group.hpp"
#include "bsn/endo.hpp"
#include "bsn/dioph.hpp"
#include "bsn/tcp.hpp"
#include "bsn/fixpoint.hpp"
#include "bsn/oracle.hpp"
