from .harness_application_service import HarnessApplicationService, IHarnessApplicationService

__all__ = ["HarnessApplicationService", "IHarnessApplicationService"]
